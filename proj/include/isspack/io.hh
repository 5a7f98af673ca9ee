#ifndef ISSPACK_IO_HH
#define ISSPACK_IO_HH

#include <isspack/core.hh>
#include <isspack/iss.hh>
#include <isspack/reduction.hh>
#include <isspack/vector_sum.hh>

#include <json.hpp>

#include <optional>
#include <string>

namespace isspack
{
    /// Keys keep insertion order so that output is byte-stable.
    using Json = nlohmann::ordered_json;

    // Elements, coordinates and vertices are 1-indexed in every document;
    // witness indices are 0-indexed positions into the set list.

    auto to_json(const SetLabel & label) -> Json;
    auto label_from_json(const Json & j) -> SetLabel;

    auto to_json(const Graph & g) -> Json;
    auto graph_from_json(const Json & j) -> Graph;

    auto to_json(const SubIsoInstance & inst) -> Json;
    auto subiso_from_json(const Json & j) -> SubIsoInstance;

    /// {"universe_size", "sets", "labels"} and, when given, "r".
    auto to_json(const SetFamily & family, std::optional<std::size_t> r = std::nullopt) -> Json;
    auto family_from_json(const Json & j) -> SetFamily;
    auto psp_from_json(const Json & j) -> PspInstance;
    auto xcover_from_json(const Json & j) -> XcoverInstance;

    auto to_json(const IssPair & pair) -> Json;
    auto iss_pair_from_json(const Json & j) -> IssPair;

    /// The set family document plus a "reduction" block (mode, gadget size,
    /// ordering and both graphs) from which the instance can be rebuilt.
    auto to_json(const ReducedPspInstance & red) -> Json;
    /// Rebuilds from the "reduction" block and checks the stored sets match.
    auto reduced_from_json(const Json & j) -> ReducedPspInstance;

    auto reduction_to_json(const ReducedPspInstance & red) -> Json;
    auto reduction_from_json(const Json & block) -> ReducedPspInstance;

    auto to_json(const VectorSumInstance & inst) -> Json;
    auto vecsum_from_json(const Json & j) -> VectorSumInstance;

    auto to_json(const Isomorphism & phi) -> Json;

    auto parse_json(const std::string & text) -> Json;
    auto read_json_file(const std::string & path) -> Json;
    auto write_text_file(const std::string & path, const std::string & text) -> void;
}

#endif
