#ifndef ISSPACK_ERRORS_HH
#define ISSPACK_ERRORS_HH

#include <stdexcept>
#include <string>

namespace isspack
{
    /// Base of every error raised by the library. The kind maps one-to-one
    /// onto the status codes of the C API.
    class Error : public std::runtime_error
    {
        public:
            enum class Kind
            {
                Argument,
                Range,
                Budget,
                Parse,
                Io,
                Soundness,
                WitnessNotFound,
                Equivalence,
                Internal
            };

            Error(Kind kind, const std::string & what) :
                std::runtime_error(what),
                _kind(kind)
            {
            }

            auto kind() const -> Kind { return _kind; }

        private:
            Kind _kind;
    };

    class ArgumentError : public Error
    {
        public:
            explicit ArgumentError(const std::string & what) : Error(Kind::Argument, what) { }
    };

    class RangeError : public Error
    {
        public:
            explicit RangeError(const std::string & what) : Error(Kind::Range, what) { }
    };

    /// Raised when a solver or enumerator would exceed its configured budget.
    /// Carries the number of search nodes expanded before giving up.
    class BudgetError : public Error
    {
        public:
            BudgetError(const std::string & what, unsigned long long nodes = 0) :
                Error(Kind::Budget, what),
                _nodes(nodes)
            {
            }

            auto nodes() const -> unsigned long long { return _nodes; }

        private:
            unsigned long long _nodes;
    };

    class ParseError : public Error
    {
        public:
            explicit ParseError(const std::string & what) : Error(Kind::Parse, what) { }
    };

    class IoError : public Error
    {
        public:
            explicit IoError(const std::string & what) : Error(Kind::Io, what) { }
    };

    /// A witness of a reduced instance failed one of the structural checks
    /// that the reduction's correctness argument guarantees. The tag names the
    /// check (for example "lemma-2-counts"). Seeing this means the reduction
    /// or a solver is wrong; it is never an expected outcome.
    class SoundnessViolation : public Error
    {
        public:
            SoundnessViolation(std::string tag, const std::string & what) :
                Error(Kind::Soundness, "soundness violation [" + tag + "]: " + what),
                _tag(std::move(tag))
            {
            }

            auto tag() const -> const std::string & { return _tag; }

        private:
            std::string _tag;
    };

    class WitnessNotFound : public Error
    {
        public:
            explicit WitnessNotFound(const std::string & what) : Error(Kind::WitnessNotFound, what) { }
    };

    /// Answers disagreed during an equivalence run. bundle() is a
    /// self-contained JSON document reproducing the failure.
    class EquivalenceFailure : public Error
    {
        public:
            EquivalenceFailure(const std::string & what, std::string bundle) :
                Error(Kind::Equivalence, what),
                _bundle(std::move(bundle))
            {
            }

            auto bundle() const -> const std::string & { return _bundle; }

        private:
            std::string _bundle;
    };

    class InternalError : public Error
    {
        public:
            explicit InternalError(const std::string & what) : Error(Kind::Internal, what) { }
    };
}

#endif
