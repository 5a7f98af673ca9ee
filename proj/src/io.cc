#include <isspack/io.hh>
#include <isspack/errors.hh>

#include <fstream>
#include <sstream>

using std::optional;
using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace isspack
{
    namespace
    {
        template <typename T_>
        auto get(const Json & j, const char * key) -> T_
        {
            if (! j.is_object() || ! j.contains(key))
                throw ParseError(string("missing field \"") + key + "\"");
            try {
                return j.at(key).get<T_>();
            }
            catch (const nlohmann::json::exception & e) {
                throw ParseError(string("field \"") + key + "\": " + e.what());
            }
        }

        auto set_to_json(const BitSet & s) -> Json
        {
            Json list = Json::array();
            for (size_t e = s.first() ; e < s.width() ; e = s.next(e))
                list.push_back(e + 1);
            return list;
        }

        auto set_from_json(const Json & list, size_t width) -> BitSet
        {
            if (! list.is_array())
                throw ParseError("set must be an array of elements");
            BitSet s(width);
            for (auto & x : list) {
                if (! x.is_number_integer())
                    throw ParseError("set element must be an integer");
                auto e = x.get<long long>();
                if (e < 1 || size_t(e) > width)
                    throw ParseError("element " + to_string(e) + " outside 1.." + to_string(width));
                if (s.test(size_t(e - 1)))
                    throw ParseError("element " + to_string(e) + " repeated in a set");
                s.set(size_t(e - 1));
            }
            return s;
        }

        auto labels_from_json(const Json & j, size_t count) -> vector<SetLabel>
        {
            vector<SetLabel> labels;
            if (! j.contains("labels") || j.at("labels").is_null())
                return labels;
            auto & list = j.at("labels");
            if (! list.is_array())
                throw ParseError("labels must be an array");
            if (list.empty())
                return labels;
            if (list.size() != count)
                throw ParseError("got " + to_string(list.size()) + " labels for " + to_string(count) + " sets");
            for (auto & l : list)
                labels.push_back(label_from_json(l));
            return labels;
        }

        auto reduction_block(const ReducedPspInstance & red) -> Json
        {
            Json order = Json::array();
            for (auto v : red.pattern.order())
                order.push_back(v);
            Json block;
            block["target"] = red.semantics == Semantics::Packing ? "psp" : "xcover";
            block["mode"] = mode_name(red.mode);
            block["n_elems"] = red.layout.n_elems();
            block["order"] = order;
            block["g"] = to_json(red.source.g());
            block["h"] = to_json(red.source.h());
            return block;
        }

        auto rebuild(const Json & block) -> ReducedPspInstance
        {
            if (! block.is_object() || ! block.contains("g") || ! block.contains("h"))
                throw ParseError("reduction block needs \"g\" and \"h\"");
            auto inst = SubIsoInstance(graph_from_json(block.at("g")), graph_from_json(block.at("h")));
            auto pattern = OrderedPattern(inst.h(), get<vector<Vertex>>(block, "order"));
            auto mode = parse_gadget_mode(get<string>(block, "mode"));
            auto target = get<string>(block, "target");
            if (target != "psp" && target != "xcover" && target != "vecsum")
                throw ParseError("unknown reduction target '" + target + "'");
            auto red = target == "psp" ? build_psp_instance(inst, pattern, mode) : build_xcover_instance(inst, pattern, mode);
            if (red.layout.n_elems() != get<size_t>(block, "n_elems"))
                throw ParseError("recorded gadget size does not match the rebuilt instance");
            return red;
        }
    }

    auto to_json(const SetLabel & label) -> Json
    {
        Json j;
        if (auto v = std::get_if<VSetLabel>(&label)) {
            j["kind"] = "V";
            j["alpha"] = v->alpha;
            j["i"] = v->i;
            j["beta"] = v->beta;
        }
        else {
            auto & e = std::get<ESetLabel>(label);
            j["kind"] = "E";
            j["alpha"] = e.alpha;
            j["beta"] = e.beta;
            j["i"] = e.i;
            j["j"] = e.j;
        }
        return j;
    }

    auto label_from_json(const Json & j) -> SetLabel
    {
        auto kind = get<string>(j, "kind");
        if (kind == "V")
            return VSetLabel{ get<int>(j, "alpha"), get<int>(j, "i"), get<int>(j, "beta") };
        if (kind == "E")
            return ESetLabel{ get<int>(j, "alpha"), get<int>(j, "beta"), get<int>(j, "i"), get<int>(j, "j") };
        throw ParseError("unknown label kind '" + kind + "'");
    }

    auto to_json(const Graph & g) -> Json
    {
        Json edges = Json::array();
        for (auto & [u, v] : g.edges())
            edges.push_back(Json::array({ u, v }));
        Json j;
        j["n"] = g.n();
        j["edges"] = edges;
        return j;
    }

    auto graph_from_json(const Json & j) -> Graph
    {
        auto n = get<int>(j, "n");
        if (n < 0)
            throw ParseError("negative vertex count");
        Graph g(n);
        auto edges = get<vector<vector<int>>>(j, "edges");
        for (auto & e : edges) {
            if (e.size() != 2)
                throw ParseError("edge must have two endpoints");
            try {
                g.add_edge(e[0], e[1]);
            }
            catch (const Error & err) {
                throw ParseError(string("bad edge: ") + err.what());
            }
        }
        return g;
    }

    auto to_json(const SubIsoInstance & inst) -> Json
    {
        Json j;
        j["g"] = to_json(inst.g());
        j["h"] = to_json(inst.h());
        return j;
    }

    auto subiso_from_json(const Json & j) -> SubIsoInstance
    {
        if (! j.contains("g") || ! j.contains("h"))
            throw ParseError("subgraph isomorphism instance needs \"g\" and \"h\"");
        try {
            return SubIsoInstance(graph_from_json(j.at("g")), graph_from_json(j.at("h")));
        }
        catch (const ArgumentError & e) {
            throw ParseError(e.what());
        }
    }

    auto to_json(const SetFamily & family, optional<size_t> r) -> Json
    {
        Json sets = Json::array();
        for (auto & s : family.sets())
            sets.push_back(set_to_json(s));
        Json labels = Json::array();
        for (auto & l : family.labels())
            labels.push_back(to_json(l));
        Json j;
        j["universe_size"] = family.universe_size();
        j["sets"] = sets;
        j["labels"] = labels;
        if (r)
            j["r"] = *r;
        return j;
    }

    auto family_from_json(const Json & j) -> SetFamily
    {
        auto universe = get<size_t>(j, "universe_size");
        auto & list = j.contains("sets") ? j.at("sets") : throw ParseError("missing field \"sets\"");
        if (! list.is_array())
            throw ParseError("sets must be an array");
        vector<BitSet> sets;
        for (auto & s : list)
            sets.push_back(set_from_json(s, universe));
        auto labels = labels_from_json(j, sets.size());
        return SetFamily(universe, std::move(sets), std::move(labels));
    }

    auto psp_from_json(const Json & j) -> PspInstance
    {
        return PspInstance{ family_from_json(j), get<size_t>(j, "r") };
    }

    auto xcover_from_json(const Json & j) -> XcoverInstance
    {
        return XcoverInstance{ family_from_json(j), get<size_t>(j, "r") };
    }

    auto to_json(const IssPair & pair) -> Json
    {
        Json inner;
        inner["n_elems"] = pair.n_elems;
        inner["m_sets"] = pair.m_sets;
        inner["s_a"] = to_json(SetFamily(pair.n_elems, pair.s_a));
        inner["s_b"] = to_json(SetFamily(pair.n_elems, pair.s_b));
        Json j;
        j["pair"] = inner;
        return j;
    }

    auto iss_pair_from_json(const Json & j) -> IssPair
    {
        if (! j.contains("pair"))
            throw ParseError("missing field \"pair\"");
        auto & inner = j.at("pair");
        IssPair pair;
        pair.n_elems = get<size_t>(inner, "n_elems");
        pair.m_sets = get<size_t>(inner, "m_sets");
        pair.s_a = family_from_json(inner.at("s_a")).sets();
        pair.s_b = family_from_json(inner.at("s_b")).sets();
        for (auto * side : { &pair.s_a, &pair.s_b })
            for (auto & s : *side)
                if (s.width() != pair.n_elems)
                    throw ParseError("pair set width does not match n_elems");
        return pair;
    }

    auto to_json(const ReducedPspInstance & red) -> Json
    {
        auto j = to_json(red.inst.family, red.inst.r);
        j["reduction"] = reduction_block(red);
        return j;
    }

    auto reduced_from_json(const Json & j) -> ReducedPspInstance
    {
        if (! j.contains("reduction"))
            throw ParseError("instance has no \"reduction\" block");
        auto red = rebuild(j.at("reduction"));
        auto stored = family_from_json(j);
        if (! (stored == red.inst.family) || get<size_t>(j, "r") != red.inst.r)
            throw ParseError("stored sets differ from the instance rebuilt from the reduction block");
        return red;
    }

    auto reduction_to_json(const ReducedPspInstance & red) -> Json
    {
        return reduction_block(red);
    }

    auto reduction_from_json(const Json & block) -> ReducedPspInstance
    {
        return rebuild(block);
    }

    auto to_json(const VectorSumInstance & inst) -> Json
    {
        Json vectors = Json::array();
        for (auto & v : inst.vectors())
            vectors.push_back(set_to_json(v));
        Json labels = Json::array();
        for (auto & l : inst.labels())
            labels.push_back(to_json(l));
        Json blocks = Json::array();
        for (auto & b : inst.indicator_blocks())
            blocks.push_back(Json::array({ b.first + 1, b.last }));
        Json j;
        j["dim"] = inst.dim();
        j["vectors"] = vectors;
        j["labels"] = labels;
        j["target"] = set_to_json(inst.target());
        j["r"] = inst.r();
        j["indicator_blocks"] = blocks;
        return j;
    }

    auto vecsum_from_json(const Json & j) -> VectorSumInstance
    {
        auto dim = get<size_t>(j, "dim");
        if (! j.contains("vectors") || ! j.at("vectors").is_array())
            throw ParseError("missing vector list");
        vector<BitSet> vectors;
        for (auto & v : j.at("vectors"))
            vectors.push_back(set_from_json(v, dim));
        auto target = set_from_json(j.contains("target") ? j.at("target") : Json::array(), dim);
        vector<Block> blocks;
        if (j.contains("indicator_blocks"))
            for (auto & b : get<vector<vector<size_t>>>(j, "indicator_blocks")) {
                if (b.size() != 2 || b[0] < 1 || b[0] > b[1] + 1)
                    throw ParseError("indicator block must be [first, last] with 1 <= first <= last + 1");
                blocks.push_back(Block{ b[0] - 1, b[1] });
            }
        auto labels = labels_from_json(j, vectors.size());
        try {
            return VectorSumInstance(dim, std::move(vectors), std::move(target), get<size_t>(j, "r"),
                    std::move(labels), std::move(blocks));
        }
        catch (const ArgumentError & e) {
            throw ParseError(e.what());
        }
    }

    auto to_json(const Isomorphism & phi) -> Json
    {
        Json map = Json::array();
        for (auto v : phi.map())
            map.push_back(v);
        Json j;
        j["map"] = map;
        return j;
    }

    auto parse_json(const string & text) -> Json
    {
        try {
            return Json::parse(text);
        }
        catch (const nlohmann::json::exception & e) {
            throw ParseError(e.what());
        }
    }

    auto read_json_file(const string & path) -> Json
    {
        std::ifstream in(path);
        if (! in)
            throw IoError("cannot open " + path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        return parse_json(buffer.str());
    }

    auto write_text_file(const string & path, const string & text) -> void
    {
        std::ofstream out(path);
        if (! out)
            throw IoError("cannot write " + path);
        out << text;
        if (! out)
            throw IoError("write to " + path + " failed");
    }
}
