#pragma once

// Structured errors for the whole library.  Every failure carries a kind tag
// and up to three integer witnesses (e.g. the violating triple of an
// associativity check), so callers and tests can assert on the exact cause.

#include <array>
#include <sstream>
#include <stdexcept>
#include <string>

namespace mlab {

enum class ErrorKind {
  malformed_table,
  non_associative,
  bad_identity,
  not_multiplicative,
  identity_not_preserved,
  domain_mismatch,
  codomain_mismatch,
  size_limit_exceeded,
  budget_exceeded,
  incompatible_partition,
  not_idempotent,
  not_a_subgroup,
  not_a_group,
  freeness_violation,
  not_faithful_on_r,
  generators_dont_generate,
  unknown_letter,
  hypothesis_fails,
  no_witness,
  unknown_family,
  parse_error,
  validation_error,
  bad_argument,
  internal_error,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::malformed_table: return "malformed-table";
    case ErrorKind::non_associative: return "non-associative";
    case ErrorKind::bad_identity: return "bad-identity";
    case ErrorKind::not_multiplicative: return "not-multiplicative";
    case ErrorKind::identity_not_preserved: return "identity-not-preserved";
    case ErrorKind::domain_mismatch: return "domain-mismatch";
    case ErrorKind::codomain_mismatch: return "codomain-mismatch";
    case ErrorKind::size_limit_exceeded: return "size-limit-exceeded";
    case ErrorKind::budget_exceeded: return "budget-exceeded";
    case ErrorKind::incompatible_partition: return "incompatible-partition";
    case ErrorKind::not_idempotent: return "not-idempotent";
    case ErrorKind::not_a_subgroup: return "not-a-subgroup";
    case ErrorKind::not_a_group: return "not-a-group";
    case ErrorKind::freeness_violation: return "freeness-violation";
    case ErrorKind::not_faithful_on_r: return "not-faithful-on-r";
    case ErrorKind::generators_dont_generate: return "generators-dont-generate";
    case ErrorKind::unknown_letter: return "unknown-letter";
    case ErrorKind::hypothesis_fails: return "hypothesis-fails";
    case ErrorKind::no_witness: return "no-witness";
    case ErrorKind::unknown_family: return "unknown-family";
    case ErrorKind::parse_error: return "parse-error";
    case ErrorKind::validation_error: return "validation-error";
    case ErrorKind::bad_argument: return "bad-argument";
    case ErrorKind::internal_error: return "internal-error";
  }
  return "unknown";
}

class MlabError : public std::runtime_error {
 public:
  MlabError(ErrorKind kind, const std::string& msg, long long w0 = -1,
            long long w1 = -1, long long w2 = -1)
      : std::runtime_error(format(kind, msg)), kind_(kind),
        witness_{w0, w1, w2} {}

  ErrorKind kind() const { return kind_; }
  long long witness(int i) const { return witness_.at(static_cast<std::size_t>(i)); }

 private:
  static std::string format(ErrorKind kind, const std::string& msg) {
    std::ostringstream os;
    os << to_string(kind) << ": " << msg;
    return os.str();
  }

  ErrorKind kind_;
  std::array<long long, 3> witness_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg,
                              long long w0 = -1, long long w1 = -1,
                              long long w2 = -1) {
  throw MlabError(kind, msg, w0, w1, w2);
}

}  // namespace mlab
