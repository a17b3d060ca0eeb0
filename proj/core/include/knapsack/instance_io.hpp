#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "knapsack/model.hpp"

namespace knapsack {

/// Text instance format:
///
///   # comment lines start with '#'
///   n W
///   w p [u]        (n lines; u omitted means 1)
///
/// ASCII decimal, whitespace separated, LF line endings.
struct InstanceFile {
  BoundedInstance instance;
  /// True if any item line carried a multiplicity column. Emitting then
  /// writes three columns on every line.
  bool bounded_format = false;
};

/// Throws ParseError (with a 1-based line number) on malformed input.
InstanceFile parse_instance(std::string_view text);
InstanceFile read_instance_file(const std::string& path);

std::string emit_instance(const InstanceFile& file);
void write_instance_file(const std::string& path, const InstanceFile& file);

/// True if every multiplicity is 1.
bool is_01(const BoundedInstance& instance);
/// Drops multiplicities; throws PreconditionError unless is_01.
Instance01 to_01(const BoundedInstance& instance);
BoundedInstance to_bounded(const Instance01& instance);

/// Seeded random instance description.
struct GenSpec {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::int64_t w_max = 1;
  std::int64_t p_max = 1;
  std::int64_t u_max = 1;
  /// Exactly one of these: W = floor(fraction * sum u_i w_i), or W itself.
  std::optional<double> fraction = 1.0;
  std::optional<std::int64_t> capacity;
};

/// Throws ValidationError for non-positive bounds or a fraction outside (0, 1].
void validate(const GenSpec& spec);

/// Deterministic in `seed`: a std::mt19937_64 stream, mapped to ranges by
/// rejection sampling, draws w in [1, w_max], p in [1, p_max] and u in
/// [1, u_max] for each item in turn.
InstanceFile generate(const GenSpec& spec);

}  // namespace knapsack
