#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace skb {

/// Index of an element inside a finite carrier [0, n). The identity of every
/// validated structure sits at index 0.
using Elem = std::int32_t;

/// Dense operation tables are materialized up to this order; larger carriers
/// use lazy backends (product / quotient / factored central product).
inline constexpr int kDenseOrderCap = 2048;

/// Isomorphism searches refuse carriers above this order unless the caller
/// supplies generators or a candidate witness.
inline constexpr int kDefaultIsoOrderCap = 1024;

/// Below this order, triple identities (associativity, brace identities) are
/// checked by brute force so failures name the first violating triple.
/// Dense tables above it use exact structured checks instead.
inline constexpr int kBruteTripleCap = 256;

/// Pairwise homomorphism checks run exhaustively up to this order; above it a
/// generator-complete check is used (still exact, see morphism verifiers).
inline constexpr int kExhaustivePairCap = 1024;

enum class Errc {
  malformed_table,
  no_identity,
  no_inverse,
  not_associative,
  identity_mismatch,
  left_brace_identity_fails,
  not_normal,
  not_an_ideal,
  not_closed,
  not_central_ideal,
  alpha_not_iso,
  not_exact_factorization,
  zero_form,
  not_orthogonal,
  not_complementary,
  order_cap_exceeded,
  unknown_name,
  precondition_failed,
  not_two_sided,
  check_failed,
  format_error,
  internal_inconsistency,
  conclusion_violated,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

  /// Exit-3 family: a failure that signals a bug or a contradicted theorem,
  /// never bad user input.
  bool is_internal() const {
    return code_ == Errc::internal_inconsistency ||
           code_ == Errc::conclusion_violated;
  }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

/// Knobs for sampled verification on lazy backends. Dense structures are
/// always checked exhaustively and ignore these.
struct CheckOptions {
  std::uint64_t seed = 0x5b5b5b5bULL;
  int samples = 1'000'000;
};

/// Deterministic cross-platform sampler (mt19937_64 with plain modulo
/// reduction; distribution objects are implementation-defined).
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : state_(seed ? seed : 1) {}

  Elem next(int n) {
    // xorshift* keeps the sampler header-only and platform-stable.
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return static_cast<Elem>((state_ * 0x2545F4914F6CDD1DULL) % n);
  }

 private:
  std::uint64_t state_;
};

}  // namespace skb
