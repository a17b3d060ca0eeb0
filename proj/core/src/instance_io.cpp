#include "knapsack/instance_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <vector>

namespace knapsack {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

Int128 field(std::string_view text, std::size_t line, const char* what) {
  try {
    return parse_int128(text);
  } catch (const std::invalid_argument&) {
    throw ParseError(line, std::string("malformed ") + what + " '" + std::string(text) + "'");
  }
}

std::int64_t bounded_field(std::string_view text, std::size_t line, const char* what, Int128 lo, Int128 hi) {
  const Int128 v = field(text, line, what);
  if (v < lo || v > hi) {
    throw ParseError(line, std::string(what) + " " + std::string(text) + " outside [" + to_string(lo) + ", " +
                               to_string(hi) + "]");
  }
  return static_cast<std::int64_t>(v);
}

// Uniform integer in [1, hi] from raw 64-bit draws by rejection.
std::int64_t draw(std::mt19937_64& rng, std::int64_t hi) {
  const auto range = static_cast<std::uint64_t>(hi);
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return static_cast<std::int64_t>(x % range) + 1;
}

}  // namespace

InstanceFile parse_instance(std::string_view text) {
  InstanceFile out;
  bool have_header = false;
  std::size_t expected = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto fields = split_fields(line);
    if (fields.empty() || fields[0].front() == '#') continue;

    if (!have_header) {
      if (fields.size() != 2) throw ParseError(line_no, "header must be 'n W'");
      expected = static_cast<std::size_t>(bounded_field(fields[0], line_no, "item count", 0, Int128{1} << 40));
      out.instance.capacity = bounded_field(fields[1], line_no, "capacity", 0, kMaxCapacity);
      out.instance.items.reserve(expected);
      have_header = true;
      continue;
    }
    if (out.instance.items.size() == expected) {
      throw ParseError(line_no, "more item lines than the header count " + std::to_string(expected));
    }
    if (fields.size() != 2 && fields.size() != 3) throw ParseError(line_no, "item line must be 'w p [u]'");
    BoundedItem item;
    item.weight = bounded_field(fields[0], line_no, "weight", 1, kMaxWeight);
    item.profit = field(fields[1], line_no, "profit");
    if (item.profit < 1 || item.profit > kMaxProfit) {
      throw ParseError(line_no, "profit " + std::string(fields[1]) + " outside [1, 2^95]");
    }
    if (fields.size() == 3) {
      item.multiplicity = bounded_field(fields[2], line_no, "multiplicity", 1, kMaxMultiplicity);
      out.bounded_format = true;
    }
    out.instance.items.push_back(item);
  }
  if (!have_header) throw ParseError(line_no, "missing header 'n W'");
  if (out.instance.items.size() != expected) {
    throw ParseError(line_no, "expected " + std::to_string(expected) + " item lines, found " +
                                  std::to_string(out.instance.items.size()));
  }
  return out;
}

InstanceFile read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string emit_instance(const InstanceFile& file) {
  std::string out;
  out += std::to_string(file.instance.size()) + " " + std::to_string(file.instance.capacity) + "\n";
  for (const auto& it : file.instance.items) {
    out += std::to_string(it.weight) + " " + to_string(it.profit);
    if (file.bounded_format) out += " " + std::to_string(it.multiplicity);
    out += "\n";
  }
  return out;
}

void write_instance_file(const std::string& path, const InstanceFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << emit_instance(file);
}

bool is_01(const BoundedInstance& instance) {
  for (const auto& it : instance.items) {
    if (it.multiplicity != 1) return false;
  }
  return true;
}

Instance01 to_01(const BoundedInstance& instance) {
  if (!is_01(instance)) throw PreconditionError("to_01: instance has multiplicities above 1");
  Instance01 out;
  out.capacity = instance.capacity;
  out.items.reserve(instance.size());
  for (const auto& it : instance.items) out.items.push_back({it.weight, it.profit});
  return out;
}

BoundedInstance to_bounded(const Instance01& instance) {
  BoundedInstance out;
  out.capacity = instance.capacity;
  out.items.reserve(instance.size());
  for (const auto& it : instance.items) out.items.push_back({it.weight, it.profit, 1});
  return out;
}

void validate(const GenSpec& spec) {
  if (spec.w_max < 1 || spec.w_max > kMaxWeight) throw ValidationError("gen: w_max must be in [1, 2^31-1]");
  if (spec.p_max < 1) throw ValidationError("gen: p_max must be positive");
  if (spec.u_max < 1 || spec.u_max > kMaxMultiplicity) throw ValidationError("gen: u_max must be in [1, 2^62]");
  if (spec.fraction.has_value() == spec.capacity.has_value()) {
    throw ValidationError("gen: give exactly one of a capacity fraction or an explicit capacity");
  }
  if (spec.fraction && !(*spec.fraction > 0.0 && *spec.fraction <= 1.0)) {
    throw ValidationError("gen: capacity fraction must lie in (0, 1]");
  }
  if (spec.capacity && (*spec.capacity < 0 || *spec.capacity > kMaxCapacity)) {
    throw ValidationError("gen: capacity outside [0, 2^62]");
  }
}

InstanceFile generate(const GenSpec& spec) {
  validate(spec);
  std::mt19937_64 rng(spec.seed);
  InstanceFile out;
  out.bounded_format = spec.u_max > 1;
  out.instance.items.reserve(spec.n);
  Int128 mass = 0;
  for (std::size_t i = 0; i < spec.n; ++i) {
    BoundedItem it;
    it.weight = draw(rng, spec.w_max);
    it.profit = draw(rng, spec.p_max);
    it.multiplicity = draw(rng, spec.u_max);
    mass += static_cast<Int128>(it.weight) * it.multiplicity;
    out.instance.items.push_back(it);
  }
  if (spec.capacity) {
    out.instance.capacity = *spec.capacity;
  } else {
    const long double w = std::floor(static_cast<long double>(*spec.fraction) * static_cast<long double>(mass));
    out.instance.capacity = static_cast<std::int64_t>(std::min<long double>(w, static_cast<long double>(kMaxCapacity)));
  }
  return out;
}

}  // namespace knapsack
