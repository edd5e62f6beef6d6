#ifndef HEXEVAL_ERRORS_HPP
#define HEXEVAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hexeval {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownExternalPredicate : Error {
    explicit UnknownExternalPredicate(const std::string& name)
        : Error("unknown external predicate &" + name) {}
};

struct ArityMismatch : Error {
    using Error::Error;
};

struct SignatureConflict : Error {
    using Error::Error;
};

// A built-in oracle cannot enumerate its outputs for the given inputs.
struct InfiniteOutputGuard : Error {
    using Error::Error;
};

struct UniverseTooLarge : Error {
    using Error::Error;
};

struct GroundingDiverged : Error {
    explicit GroundingDiverged(int max_iter)
        : Error("grounding fixpoint not reached within " + std::to_string(max_iter) +
                " iterations") {}
    using Error::Error;
};

struct EtabParseError : Error {
    EtabParseError(int line, const std::string& msg)
        : Error("line " + std::to_string(line) + ": " + msg), line(line) {}
    int line;
};

struct JoinUndefined : Error {
    using Error::Error;
};

struct DuplicateExpandedInterpretation : Error {
    using Error::Error;
};

struct IncompleteGraph : Error {
    using Error::Error;
};

struct SizeTooLarge : Error {
    using Error::Error;
};

}  // namespace hexeval

#endif
