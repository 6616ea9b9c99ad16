#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hetcache/delivery.hpp"

namespace hetcache {

struct DecodeError : std::runtime_error {
  enum class Kind { UnresolvableSegments, RankDeficient };
  Kind kind;
  DecodeError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind(kind) {}
};

// The private side of a user's cache: bit values of every file at the
// positions the placement assigned to this user, ascending.
struct UserCache {
  int user = 0;
  std::vector<BitVec> file_values;  // per file, |positions| bits
};

UserCache fill_cache(const SystemConfig& config, const Library& library,
                     const Placement& placement, int user);

// Reconstructs the user's requested file from its cache, the public
// placement metadata and the broadcast ledger. Coded ledgers resolve by a
// worklist fixpoint over segments (a segment resolves once all but one
// source is known); random ledgers solve the per-file GF(2) system with the
// cached bits as knowns. Throws DecodeError when the ledger is insufficient.
BitVec decode_user(const SystemConfig& config, int user, const UserCache& cache,
                   const Placement& placement, const SubfilePartition& partition,
                   const MessageLedger& ledger, const Demand& demand);

struct UserOutcome {
  int user = 0;
  bool ok = false;
  std::int64_t mismatched_bits = 0;
  std::string error;  // decode error text, empty on success
};

struct VerifyReport {
  std::vector<UserOutcome> users;
  int users_failed = 0;
  bool all_ok = false;
  Rational rate;
};

// Ground-truth check: decodes every user and compares against the library
// bit for bit. Failures are reported, never thrown.
VerifyReport verify_all(const SystemConfig& config, const Library& library,
                        const Placement& placement, const Demand& demand,
                        const MessageLedger& ledger);

std::string render_table(const VerifyReport& report);

// "ok=<bool> rate=<decimal> users_failed=<n>"
std::string summary_line(const VerifyReport& report);

}  // namespace hetcache
