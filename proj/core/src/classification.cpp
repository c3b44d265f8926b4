#include "redlab/classification.hpp"

#include <algorithm>
#include <thread>

#include "redlab/error.hpp"
#include "redlab/redundancy.hpp"
#include "redlab/tables.hpp"

namespace redlab {

namespace {

bool listed_chain(const HJString& s) {
  const auto& w = s.weights();
  const std::size_t l = w.size();
  auto all_two = [](auto first, auto last) { return std::all_of(first, last, [](int n) { return n == 2; }); };
  if (l == 1) return true;  // [2] is A_1, [n] for n >= 3 is listed
  if (all_two(w.begin(), w.end())) return true;
  if (w.back() == 3 && all_two(w.begin(), w.end() - 1)) return true;
  if (w.front() == 3 && all_two(w.begin() + 1, w.end())) return true;
  const HJString n = normalized(s);
  for (const auto& listed : {std::vector<int>{2, 2, 3, 2}, {2, 3, 2}, {2, 4}})
    if (n == normalized(HJString(listed))) return true;
  return false;
}

}  // namespace

bool reddisc_member(const DualGraph& g) {
  if (classify(discrepancies(g)) == SingularityClass::Canonical) return true;
  const auto shape = recognize_shape(g);
  const auto* a = std::get_if<TypeA>(&shape);
  return a && listed_chain(a->string);
}

bool tfae_check(const HJData& d, std::size_t k) {
  const std::size_t l = d.string.length();
  if (k < 1 || k + 1 > l)
    throw Error(ErrorCode::IndexOutOfRange, "k=" + std::to_string(k) + " outside 1.." + std::to_string(l > 0 ? l - 1 : 0));
  return d.q >= d.u[k] + d.u[k + 1] + d.v[k] + d.v[k + 1];
}

bool tfae_check(const HJString& s, std::size_t k) { return tfae_check(uv_sequences(s), k); }

bool operator==(const Counterexample& a, const Counterexample& b) {
  return a.graph == b.graph && a.reason == b.reason;
}

std::vector<HJString> all_strings(int max_len, int max_weight) {
  std::vector<HJString> out;
  for (int l = 1; l <= max_len; ++l) {
    std::vector<int> w(static_cast<std::size_t>(l), 2);
    for (;;) {
      out.emplace_back(w);
      int i = l - 1;
      while (i >= 0 && w[static_cast<std::size_t>(i)] == max_weight) w[static_cast<std::size_t>(i--)] = 2;
      if (i < 0) break;
      ++w[static_cast<std::size_t>(i)];
    }
  }
  return out;
}

namespace {

struct Partial {
  std::size_t checked = 0;
  std::size_t without = 0;
  std::vector<Counterexample> bad;
};

Partial sweep_chains(const std::vector<HJString>& strings, std::size_t begin, std::size_t end) {
  Partial p;
  for (std::size_t i = begin; i < end; ++i) {
    const auto g = chain_graph(strings[i]);
    const bool none = redundant_points(negative_part(g)).empty();
    const bool member = reddisc_member(g);
    ++p.checked;
    if (none) ++p.without;
    if (none != member)
      p.bad.push_back({strings[i].to_string(), none ? "no redundant point but not in the list"
                                                    : "listed but has a redundant point"});
  }
  return p;
}

void check_star(const DualGraph& g, const std::string& name, ClassificationReport& report) {
  const auto d = discrepancies(g);
  const auto cls = classify(d);
  const bool none = redundant_points(negative_part(g)).empty();
  if (cls == SingularityClass::Canonical) ++report.canonical_graphs;
  if (cls == SingularityClass::NonLogTerminal) report.counterexamples.push_back({name, "not log terminal"});
  if (none != (cls == SingularityClass::Canonical))
    report.counterexamples.push_back({name, none ? "non-canonical without redundant point" : "canonical with redundant point"});
  if (none != reddisc_member(g)) report.counterexamples.push_back({name, "membership disagrees"});
}

}  // namespace

ClassificationReport verify_classification(const SweepBounds& bounds, unsigned jobs) {
  if (bounds.a_max_len < 1 || bounds.a_max_weight < 2)
    throw Error(ErrorCode::BadParameters, "chain bounds must be >= 1 (length) and >= 2 (weight)");
  ClassificationReport report;

  const auto strings = all_strings(bounds.a_max_len, bounds.a_max_weight);
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(strings.size())));
  std::vector<Partial> parts(jobs);
  const std::size_t chunk = (strings.size() + jobs - 1) / jobs;
  {
    std::vector<std::jthread> workers;
    for (unsigned j = 0; j < jobs; ++j) {
      const std::size_t b = std::min(strings.size(), j * chunk), e = std::min(strings.size(), b + chunk);
      workers.emplace_back([&, j, b, e] { parts[j] = sweep_chains(strings, b, e); });
    }
  }
  for (auto& p : parts) {
    report.a_strings += p.checked;
    report.a_without_points += p.without;
    report.counterexamples.insert(report.counterexamples.end(), p.bad.begin(), p.bad.end());
  }

  for (int b = 2; b <= bounds.d_max_b; ++b) {
    for (const auto& arm : all_strings(bounds.d_max_arm_len, bounds.d_max_arm_weight)) {
      check_star(d_graph(b, arm), "D b=" + std::to_string(b) + " arm=" + arm.to_string(), report);
      ++report.d_graphs;
    }
  }

  for (const auto& row : table3_rows()) {
    for (int b = 2; b <= bounds.bracket_max_b; ++b) {
      check_star(bracket_graph(b, hj_expand(row.q, row.q1), hj_expand(row.qp, row.q1p)), row.label(b), report);
      ++report.bracket_graphs;
    }
  }
  return report;
}

}  // namespace redlab
