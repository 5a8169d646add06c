#include "stldist/trace.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace stldist {

Rat Domain::linf_diameter() const {
  Rat d = 0;
  for (const auto& [lo, hi] : bounds) d = std::max(d, Rat(hi - lo));
  return d;
}

bool Domain::contains(int dim, const Rat& v) const {
  return v >= bounds[dim].first && v <= bounds[dim].second;
}

Domain Domain::unit(int dims) {
  Domain d;
  d.bounds.assign(dims, {Rat(0), Rat(1)});
  return d;
}

Trace::Trace(std::vector<std::vector<Rat>> values, Domain domain)
    : values_(std::move(values)), domain_(std::move(domain)) {
  if (values_.empty()) throw std::invalid_argument("trace must have length >= 1");
  for (const auto& [lo, hi] : domain_.bounds)
    if (lo > hi) throw std::invalid_argument("domain bound has lo > hi");
  const size_t n = domain_.bounds.size();
  for (size_t t = 0; t < values_.size(); ++t) {
    if (values_[t].size() != n)
      throw std::invalid_argument("trace row " + std::to_string(t) +
                                  " has wrong dimensionality");
    for (size_t j = 0; j < n; ++j)
      if (!domain_.contains(static_cast<int>(j), values_[t][j]))
        throw std::invalid_argument("trace sample at t=" + std::to_string(t) +
                                    ", x" + std::to_string(j + 1) +
                                    " lies outside the domain");
  }
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  for (auto& s : out) {
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    s = a == std::string::npos ? "" : s.substr(a, b - a + 1);
  }
  return out;
}

[[noreturn]] void csv_fail(const std::string& source, int line,
                           const std::string& msg) {
  throw std::runtime_error(source + ":" + std::to_string(line) + ": " + msg);
}

}  // namespace

Trace load_trace_csv(std::istream& in, const Domain& domain,
                     const std::string& source) {
  std::string line;
  int lineno = 0;
  if (!std::getline(in, line)) csv_fail(source, 1, "empty trace file");
  ++lineno;

  auto header = split_csv(line);
  const int n = domain.dims();
  if (static_cast<int>(header.size()) != n + 1 || header[0] != "t")
    csv_fail(source, lineno, "expected header 't,x1,...,x" + std::to_string(n) + "'");
  for (int j = 0; j < n; ++j)
    if (header[j + 1] != "x" + std::to_string(j + 1))
      csv_fail(source, lineno, "bad header column '" + header[j + 1] + "'");

  std::vector<std::vector<Rat>> rows;
  int expected_t = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    auto cells = split_csv(line);
    if (static_cast<int>(cells.size()) != n + 1)
      csv_fail(source, lineno, "expected " + std::to_string(n + 1) + " columns");
    Rat t;
    try {
      t = rat_from_string(cells[0]);
    } catch (const std::invalid_argument&) {
      csv_fail(source, lineno, "malformed time value '" + cells[0] + "'");
    }
    if (t != expected_t)
      csv_fail(source, lineno,
               "times must be consecutive integers starting at 0; expected " +
                   std::to_string(expected_t));
    std::vector<Rat> row;
    row.reserve(n);
    for (int j = 0; j < n; ++j) {
      try {
        row.push_back(rat_from_string(cells[j + 1]));
      } catch (const std::invalid_argument&) {
        csv_fail(source, lineno, "malformed value '" + cells[j + 1] + "'");
      }
    }
    rows.push_back(std::move(row));
    ++expected_t;
  }
  if (rows.empty()) csv_fail(source, lineno, "trace has no samples");
  try {
    return Trace(std::move(rows), domain);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(source + ": " + e.what());
  }
}

Trace load_trace_csv_file(const std::string& path, const Domain& domain) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open trace file " + path);
  return load_trace_csv(in, domain, path);
}

void save_trace_csv(std::ostream& out, const Trace& trace) {
  out << 't';
  for (int j = 0; j < trace.dims(); ++j) out << ",x" << j + 1;
  out << '\n';
  for (int t = 0; t < trace.length(); ++t) {
    out << t;
    for (int j = 0; j < trace.dims(); ++j)
      out << ',' << rat_to_string(trace.at(t, j));
    out << '\n';
  }
}

}  // namespace stldist
