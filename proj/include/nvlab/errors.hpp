#ifndef NVLAB_ERRORS_HPP
#define NVLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nvlab {

/* Every failure the engine can diagnose carries one of these kinds. The CLI
 * maps kinds to exit codes: input-schema problems -> 1, mathematical
 * validation failures -> 2, resource caps -> 3. */
enum class ErrorKind {
    // input / schema
    SchemaViolation,
    // exact linear algebra
    NonPositiveParameter,
    TruncationMismatch,
    NegativeSeriesCoefficient,
    // complexes and cocycles
    MissingFace,
    NotClosed,
    NotFlat,
    ComplexMismatch,
    // group actions and equivariant structures
    NotHomomorphism,
    NotSimplicial,
    NotAdmissible,
    CocycleLawViolation,
    TransportIncompatible,
    CocycleNotInvariant,
    ActionNotFree,
    NontrivialStabilizerAction,
    // Borel machinery
    StabilityViolation,
    ResourceLimit,
    // series bookkeeping
    TruncationExceedsComputation,
    IndexNotDividing,
    OddNovikovNonzero,
    NonIntegerCount,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
          kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

}  // namespace nvlab

#endif
