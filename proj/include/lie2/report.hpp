#pragma once

// Equation-residual reports shared by all checkers.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <future>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "lie2/exactla.hpp"

namespace lie2 {

/// One failing instance of an identity: the equation id, the basis tuple it
/// was evaluated on, and the nonzero residual (left side minus right side).
struct Violation {
  std::string equation;
  std::string args;  // one letter per tuple slot, e.g. "xyb"
  std::vector<std::size_t> tuple;
  Vector residual;
};

/// An identity to be evaluated on every tuple of basis indices.
struct Equation {
  std::string id;
  std::string args;
  std::vector<std::size_t> dims;
  std::function<Vector(std::span<const std::size_t>)> residual;
};

struct CheckOptions {
  unsigned threads = 1;
};

/// Evaluates every equation on every basis tuple. Equations may run
/// concurrently; the result is ordered by equation, then tuple.
inline std::vector<Violation> run_equations(const std::vector<Equation>& equations, const CheckOptions& opts = {}) {
  auto run_one = [](const Equation& eq) {
    std::vector<Violation> out;
    for_each_tuple(eq.dims, [&](std::span<const std::size_t> idx) {
      Vector r = eq.residual(idx);
      if (!is_zero(r)) out.push_back({eq.id, eq.args, {idx.begin(), idx.end()}, std::move(r)});
    });
    return out;
  };
  std::vector<std::vector<Violation>> per(equations.size());
  const std::size_t width = std::max(1u, opts.threads);
  for (std::size_t start = 0; start < equations.size(); start += width) {
    const std::size_t stop = std::min(equations.size(), start + width);
    if (width == 1) {
      per[start] = run_one(equations[start]);
      continue;
    }
    std::vector<std::future<std::vector<Violation>>> jobs;
    for (std::size_t e = start; e < stop; ++e) jobs.push_back(std::async(std::launch::async, run_one, std::cref(equations[e])));
    for (std::size_t e = start; e < stop; ++e) per[e] = jobs[e - start].get();
  }
  std::vector<Violation> all;
  for (auto& v : per) all.insert(all.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
  return all;
}

/// Every residual (zero or not) stacked in equation, then tuple order.
inline Vector stacked_residuals(const std::vector<Equation>& equations) {
  Vector out;
  for (const auto& eq : equations)
    for_each_tuple(eq.dims, [&](std::span<const std::size_t> t) {
      const Vector r = eq.residual(t);
      out.insert(out.end(), r.begin(), r.end());
    });
  return out;
}

class CheckReport {
 public:
  std::vector<Violation> violations;     // defining identities
  std::vector<Violation> implied;        // consequences, checked for cross-validation
  std::vector<Violation> informational;  // probes that are never enforced

  bool passed() const { return violations.empty(); }

  /// Equation ids with at least one violation, in report order.
  std::vector<std::string> failed_equations() const { return ids(violations); }
  std::vector<std::string> failed_implied() const { return ids(implied); }

  std::size_t count(const std::string& equation) const {
    return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(),
                                                  [&](const Violation& v) { return v.equation == equation; }));
  }

  /// Human-readable listing, at most `limit` residuals per equation.
  void write(std::ostream& os, std::size_t limit = 20) const {
    write_list(os, "violation", violations, limit);
    write_list(os, "implied-violation", implied, limit);
    write_list(os, "note", informational, limit);
  }

 private:
  static std::vector<std::string> ids(const std::vector<Violation>& list) {
    std::vector<std::string> out;
    for (const auto& v : list)
      if (std::find(out.begin(), out.end(), v.equation) == out.end()) out.push_back(v.equation);
    return out;
  }

  static void write_list(std::ostream& os, const char* tag, const std::vector<Violation>& list, std::size_t limit) {
    for (const auto& id : ids(list)) {
      std::size_t total = 0, shown = 0;
      for (const auto& v : list) {
        if (v.equation != id) continue;
        ++total;
        if (shown == limit) continue;
        ++shown;
        os << tag << " " << id << " at (";
        for (std::size_t s = 0; s < v.tuple.size(); ++s) {
          if (s) os << ", ";
          os << (s < v.args.size() ? std::string(1, v.args[s]) : std::string("i")) << "=" << v.tuple[s];
        }
        os << ") residual [";
        for (std::size_t k = 0; k < v.residual.size(); ++k) os << (k ? ", " : "") << to_string(v.residual[k]);
        os << "]\n";
      }
      os << tag << " " << id << ": " << total << " total";
      if (total > shown) os << " (" << (total - shown) << " not shown)";
      os << "\n";
    }
  }
};

}  // namespace lie2
