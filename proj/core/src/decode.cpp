#include "hetcache/decode.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "hetcache/gf2.hpp"

namespace hetcache {

UserCache fill_cache(const SystemConfig& config, const Library& library,
                     const Placement& placement, int user) {
  UserCache cache;
  cache.user = user;
  cache.file_values.reserve(config.num_files);
  for (int i = 0; i < config.num_files; ++i)
    cache.file_values.push_back(gather(library.files[i], placement.positions(user, i)));
  return cache;
}

namespace {

// Bit values of every file at this user's cached positions, scattered back
// to full F-bit vectors (zero elsewhere).
std::vector<BitVec> scatter_cache(const SystemConfig& config, const UserCache& cache,
                                  const Placement& placement) {
  std::vector<BitVec> full(config.num_files);
  for (int i = 0; i < config.num_files; ++i) {
    full[i] = BitVec(static_cast<std::size_t>(config.file_size_bits));
    scatter(full[i], placement.positions(cache.user, i), cache.file_values[i]);
  }
  return full;
}

BitVec decode_coded(const SystemConfig& config, int user, const UserCache& cache,
                    const Placement& placement, const SubfilePartition& partition,
                    const MessageLedger& ledger, int wanted_file) {
  const auto cache_full = scatter_cache(config, cache, placement);

  // Known subfile payloads, own-cache pieces first. Zero-length subfiles
  // count as known; they never need delivery.
  std::map<SubfileLabel, BitVec> known;
  auto is_known = [&](const SubfileLabel& label) {
    if (partition.size_of(label.file, label.cached_by) == 0) return true;
    if ((label.cached_by >> user) & 1u) return true;
    return known.contains(label);
  };
  auto payload_of = [&](const SubfileLabel& label) -> BitVec {
    auto positions = partition.bits(label.file, label.cached_by);
    if ((label.cached_by >> user) & 1u) return gather(cache_full[label.file], positions);
    auto it = known.find(label);
    if (it != known.end()) return it->second;
    return BitVec(positions.size());  // zero-length case
  };

  // Worklist propagation: index segments by source label, track how many
  // sources are still unknown, resolve segments as they reach one unknown.
  std::map<SubfileLabel, std::vector<std::size_t>> segments_with;
  std::vector<int> unknown_count(ledger.segments.size(), 0);
  std::deque<std::size_t> ready;

  for (std::size_t s = 0; s < ledger.segments.size(); ++s) {
    const Segment& segment = ledger.segments[s];
    if (segment.tag == PartTag::RND) continue;
    for (const auto& label : segment.sources) {
      if (is_known(label)) continue;
      segments_with[label].push_back(s);
      ++unknown_count[s];
    }
    if (unknown_count[s] == 1) ready.push_back(s);
  }

  while (!ready.empty()) {
    const std::size_t s = ready.front();
    ready.pop_front();
    if (unknown_count[s] != 1) continue;  // resolved via another segment
    const Segment& segment = ledger.segments[s];

    const SubfileLabel* unknown = nullptr;
    BitVec acc = segment.payload;
    for (const auto& label : segment.sources) {
      if (is_known(label))
        acc = xor_padded(acc, payload_of(label));
      else
        unknown = &label;
    }
    if (unknown == nullptr) continue;
    // acc now equals the missing subfile zero-padded to the segment length.
    const SubfileLabel resolved = *unknown;
    acc.resize(partition.size_of(resolved.file, resolved.cached_by));
    known.emplace(resolved, std::move(acc));
    unknown_count[s] = 0;

    auto it = segments_with.find(resolved);
    if (it != segments_with.end()) {
      for (std::size_t other : it->second) {
        if (--unknown_count[other] == 1) ready.push_back(other);
      }
    }
  }

  // Assemble the requested file from cached and recovered pieces.
  BitVec out(static_cast<std::size_t>(config.file_size_bits));
  for (const auto& [mask, positions] : partition.by_file[wanted_file]) {
    if (positions.empty()) continue;
    SubfileLabel label{wanted_file, mask};
    if (!is_known(label))
      throw DecodeError(DecodeError::Kind::UnresolvableSegments,
                        "user " + std::to_string(user + 1) + " cannot resolve subfile " +
                            format_label(label));
    scatter(out, positions, payload_of(label));
  }
  return out;
}

BitVec decode_random(const SystemConfig& config, int user, const UserCache& cache,
                     const Placement& placement, const MessageLedger& ledger,
                     int wanted_file) {
  const auto F = static_cast<std::size_t>(config.file_size_bits);
  auto held_positions = placement.positions(user, wanted_file);
  std::vector<bool> held(F, false);
  for (std::uint32_t b : held_positions) held[b] = true;
  std::vector<std::uint32_t> missing;
  for (std::uint32_t b = 0; b < F; ++b)
    if (!held[b]) missing.push_back(b);

  BitVec out(F);
  scatter(out, held_positions, cache.file_values[wanted_file]);
  if (missing.empty()) return out;

  // Move the known (cached) part of each combination to the right-hand side
  // and solve for the missing positions.
  Gf2Solver solver(missing.size());
  for (const auto& segment : ledger.segments) {
    if (segment.tag != PartTag::RND || segment.file != wanted_file) continue;
    const bool rhs = segment.payload.get(0) ^ segment.coefficients.and_parity(out);
    solver.add_row(gather(segment.coefficients, missing), rhs);
    if (solver.complete()) break;
  }
  if (!solver.complete())
    throw DecodeError(DecodeError::Kind::RankDeficient,
                      "user " + std::to_string(user + 1) + ": combinations for file " +
                          std::to_string(wanted_file + 1) + " rank " +
                          std::to_string(solver.rank()) + " of " +
                          std::to_string(missing.size()));
  auto solution = solver.solve();
  scatter(out, missing, *solution);
  return out;
}

}  // namespace

BitVec decode_user(const SystemConfig& config, int user, const UserCache& cache,
                   const Placement& placement, const SubfilePartition& partition,
                   const MessageLedger& ledger, const Demand& demand) {
  const int wanted_file = demand.requests[user];

  const bool random_ledger =
      std::any_of(ledger.segments.begin(), ledger.segments.end(),
                  [](const Segment& s) { return s.tag == PartTag::RND; });
  if (random_ledger)
    return decode_random(config, user, cache, placement, ledger, wanted_file);
  return decode_coded(config, user, cache, placement, partition, ledger, wanted_file);
}

VerifyReport verify_all(const SystemConfig& config, const Library& library,
                        const Placement& placement, const Demand& demand,
                        const MessageLedger& ledger) {
  VerifyReport report;
  report.rate = measure_rate(ledger);

  const SubfilePartition partition = partition_subfiles(config, placement);
  for (int k = 0; k < config.num_users; ++k) {
    UserOutcome outcome;
    outcome.user = k;
    const UserCache cache = fill_cache(config, library, placement, k);
    try {
      BitVec recovered = decode_user(config, k, cache, placement, partition, ledger, demand);
      const BitVec& truth = library.files[demand.requests[k]];
      // Overlap mismatches plus any length difference, all counted as wrong.
      const std::size_t overlap = std::min(recovered.size(), truth.size());
      BitVec diff = xor_padded(recovered, truth);
      diff.resize(overlap);
      outcome.mismatched_bits =
          static_cast<std::int64_t>(diff.count()) +
          static_cast<std::int64_t>(std::max(recovered.size(), truth.size()) - overlap);
      outcome.ok = outcome.mismatched_bits == 0;
    } catch (const DecodeError& e) {
      outcome.ok = false;
      outcome.mismatched_bits = config.file_size_bits;
      outcome.error = e.what();
    }
    if (!outcome.ok) ++report.users_failed;
    report.users.push_back(std::move(outcome));
  }
  report.all_ok = report.users_failed == 0;
  return report;
}

std::string render_table(const VerifyReport& report) {
  std::string out = "user  requested-file-recovered  mismatched-bits\n";
  for (const auto& u : report.users) {
    out += std::to_string(u.user + 1);
    out += u.ok ? "     yes                       " : "     no                        ";
    out += std::to_string(u.mismatched_bits);
    if (!u.error.empty()) out += "  (" + u.error + ")";
    out += "\n";
  }
  out += summary_line(report) + "\n";
  return out;
}

std::string summary_line(const VerifyReport& report) {
  return std::string("ok=") + (report.all_ok ? "true" : "false") +
         " rate=" + to_decimal_string(report.rate, 6) +
         " users_failed=" + std::to_string(report.users_failed);
}

}  // namespace hetcache
