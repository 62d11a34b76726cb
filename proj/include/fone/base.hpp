#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fone {

// Error codes shared across the library. Every validation failure carries one
// of these plus a witness message describing the offending data.
enum class Errc {
  NonInjective,
  BadDomain,
  DimMismatch,
  GroupMismatch,
  NotMono,
  NotEpi,
  NotAssociative,
  NoIdentity,
  IncompleteTable,
  CyclicQuiver,
  RelationInconsistent,
  ZeroElement,
  NotIdempotent,
  NotInverse,
  NotFunctorial,
  BadIdentity,
  NotInductiveHere,
  NotLeftInductive,
  DimTooLarge,
  BaseNotSimple,
  NotNormal,
  FreenessViolated,
  GroupTooLarge,
  CapExceeded,
  AxiomViolated,
  BadInput,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

// Tunable search/enumeration limits. Conservative defaults; the CLI exposes
// the interesting ones as flags.
struct Caps {
  uint32_t all_subreps_max_dim = 16;
  uint32_t iso_max_dim = 8;
  uint32_t oracle_max_dim = 4;
  uint64_t max_subgroup_order = 5040;
  // When dim! * |G|^dim exceeds this, iso keys fall back to invariant tuples.
  uint64_t key_work_limit = 2000000;
};

}  // namespace fone
