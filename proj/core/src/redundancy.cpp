#include "redlab/redundancy.hpp"

#include <algorithm>
#include <functional>

#include "redlab/error.hpp"

namespace redlab {

std::string to_string(const PointLocation& p) {
  if (const auto* ip = std::get_if<IntersectionPoint>(&p))
    return "E" + std::to_string(ip->first) + "^E" + std::to_string(ip->second);
  return "generic(E" + std::to_string(std::get<GenericPoint>(p).curve) + ")";
}

const Curve& CurveConfig::curve(int id) const {
  for (const auto& c : curves_)
    if (c.id == id) return c;
  throw Error(ErrorCode::UnknownPoint, "no curve E" + std::to_string(id));
}

Rational CurveConfig::mult_at(const PointLocation& p) const {
  if (const auto* ip = std::get_if<IntersectionPoint>(&p)) {
    if (!incidences_.count(*ip)) throw Error(ErrorCode::UnknownPoint, to_string(p) + " is not an intersection point");
    return curve(ip->first).coefficient + curve(ip->second).coefficient;
  }
  return curve(std::get<GenericPoint>(p).curve).coefficient;
}

CurveConfig negative_part(const DualGraph& g) {
  const auto d = discrepancies(g);
  CurveConfig c;
  int max_id = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& v = g.vertices()[i];
    c.curves_.push_back({v.id, d.values[i], -v.weight});
    max_id = std::max(max_id, v.id);
  }
  for (const auto& [a, b] : g.edges()) c.incidences_.insert(IntersectionPoint(a, b));
  c.origin_ = std::make_shared<const DualGraph>(g);
  c.next_id_ = max_id + 1;
  return c;
}

std::vector<RedundantPoint> redundant_points(const CurveConfig& c) {
  const Rational one(1);
  std::vector<RedundantPoint> out;
  for (const auto& p : c.incidences()) {
    Rational m = c.mult_at(p);
    if (m >= one) out.push_back({p, std::move(m)});
  }
  for (const auto& cv : c.curves())
    if (cv.coefficient >= one) out.push_back({GenericPoint{cv.id}, cv.coefficient});
  return out;
}

CurveConfig blow_up(const CurveConfig& c, const PointLocation& p) {
  return blow_up(c, RedundantPoint{p, c.mult_at(p)});
}

CurveConfig blow_up(const CurveConfig& c, const RedundantPoint& p) {
  const Rational mult = c.mult_at(p.location);
  if (mult < Rational(1))
    throw Error(ErrorCode::NotRedundant, to_string(p.location) + " has multiplicity " + mult.to_string() + " < 1");

  CurveConfig out = c;
  const int e = out.next_id_++;
  std::vector<int> through;
  if (const auto* ip = std::get_if<IntersectionPoint>(&p.location)) {
    through = {ip->first, ip->second};
    out.incidences_.erase(*ip);
  } else {
    through = {std::get<GenericPoint>(p.location).curve};
  }
  for (auto& cv : out.curves_)
    if (std::find(through.begin(), through.end(), cv.id) != through.end()) cv.self_intersection -= 1;
  for (int id : through) out.incidences_.insert(IntersectionPoint(id, e));
  out.curves_.push_back({e, mult - Rational(1), -1});
  out.newest_ = e;
  ++out.blow_ups_;
  return out;
}

long m_of_p(const CurveConfig& c, const IntersectionPoint& p) {
  const Rational mult = c.mult_at(p);
  if (mult < Rational(1)) throw Error(ErrorCode::NotRedundant, to_string(p) + " is not redundant");
  long best = 0;
  for (int id : {p.first, p.second}) {
    const Rational& a = c.curve(id).coefficient;
    if (a >= Rational(1))
      throw Error(ErrorCode::UnboundedAtPoint, "E" + std::to_string(id) + " has coefficient " + a.to_string() + " >= 1");
    // least M with mult - M (1 - a) < 1
    const Integer m = floor((mult - Rational(1)) / (Rational(1) - a)) + 1;
    best = std::max(best, m.get_si());
  }
  return best;
}

SequenceReport enumerate_sequences(const CurveConfig& c, std::size_t depth_bound, std::size_t tree_limit) {
  SequenceReport report;
  const bool unbounded = classify(discrepancies(c.origin())) == SingularityClass::NonLogTerminal;
  report.redundant_at_every_level = true;

  const auto initial = redundant_points(c);
  for (const auto& rp : initial) {
    const auto* ip = std::get_if<IntersectionPoint>(&rp.location);
    if (!ip) continue;
    if (c.curve(ip->first).coefficient < Rational(1) && c.curve(ip->second).coefficient < Rational(1))
      report.m_values.emplace_back(*ip, m_of_p(c, *ip));
  }

  long longest = 0;
  std::function<void(const CurveConfig&, const std::vector<RedundantPoint>&, std::size_t)> search =
      [&](const CurveConfig& cfg, const std::vector<RedundantPoint>& centres, std::size_t depth) {
        for (const auto& rp : centres) {
          if (depth == depth_bound) {
            report.truncated = true;
            return;
          }
          CurveConfig next = blow_up(cfg, rp);
          ++report.sequence_count;
          const int e = *next.newest();
          if (report.tree.size() < tree_limit) report.tree.push_back({depth + 1, rp.location, rp.mult, e});
          longest = std::max(longest, static_cast<long>(depth + 1));
          report.explored_depth = std::max(report.explored_depth, depth + 1);

          const auto all = redundant_points(next);
          if (all.empty()) report.redundant_at_every_level = false;
          std::vector<RedundantPoint> on_new;
          for (const auto& q : all) {
            const bool on_e = std::visit(
                [e](const auto& loc) {
                  if constexpr (std::is_same_v<std::decay_t<decltype(loc)>, IntersectionPoint>)
                    return loc.on(e);
                  else
                    return loc.curve == e;
                },
                q.location);
            if (on_e) on_new.push_back(q);
          }
          search(next, on_new, depth + 1);
        }
      };
  if (initial.empty()) report.redundant_at_every_level = false;
  search(c, initial, 0);

  if (!unbounded) report.max_length = longest;
  return report;
}

}  // namespace redlab
