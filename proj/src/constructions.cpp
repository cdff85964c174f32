#include "multidesign/constructions.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

#include "multidesign/bipartite.hpp"
#include "multidesign/catalog.hpp"

namespace multidesign {

namespace {

using catalog::CatalogKind;

// A bundled design placed on the union of some parts. Label i of `design`
// goes to the order[i]-th smallest vertex of that union.
struct Base {
  std::vector<std::size_t> parts;
  Design design;
  std::vector<Vertex> order;
};

struct Plan {
  JoinLayout layout;
  std::vector<Base> bases;
};

Design bundled(CatalogKind kind, std::uint32_t m) { return catalog::get({kind, m}); }

Design hexagons_k9() { return catalog::derived_base({CatalogKind::PureHexagonDecomposition, 9}); }
Design prisms_k10() { return catalog::derived_base({CatalogKind::PurePrismDecomposition, 10}); }

std::size_t first_of(const Design& d, BlockType type) {
  const auto it = std::find_if(d.blocks.begin(), d.blocks.end(), [&](const Block& b) { return b.type() == type; });
  return static_cast<std::size_t>(it - d.blocks.begin());
}

Design packing_k10() {
  Design d = prisms_k10();
  Block& p = d.blocks[first_of(d, BlockType::Prism)];
  PrismMinusMatching r = prism_minus_matching(p);
  p = r.hexagon;
  d.kind = DesignKind::Packing;
  d.leave = std::move(r.matching);
  return d;
}

Design covering_k9() {
  Design d = hexagons_k9();
  Block& h = d.blocks[first_of(d, BlockType::Hexagon)];
  HexagonPlusFactor r = hexagon_plus_factor(h);
  h = r.prism;
  d.kind = DesignKind::Covering;
  d.padding = std::move(r.matching);
  return d;
}

Design covering_k10() {
  Design d = prisms_k10();
  const std::size_t i = first_of(d, BlockType::Prism);
  PrismAsTwoHexagons r = prism_to_two_hexagons(d.blocks[i]);
  d.blocks[i] = r.first;
  d.blocks.insert(d.blocks.begin() + static_cast<std::ptrdiff_t>(i) + 1, r.second);
  d.kind = DesignKind::Covering;
  d.padding = std::move(r.padding);
  return d;
}

std::vector<Vertex> identity_order(const Design& d) { return identity_map(d.host.vertices().size()); }

class PlanBuilder {
 public:
  explicit PlanBuilder(std::uint32_t n) : n_(n) {}

  PlanBuilder& part(std::uint32_t size, std::uint32_t copies = 1) {
    for (std::uint32_t i = 0; i < copies; ++i) {
      plan_.layout.parts.push_back({size, next_});
      next_ += size;
    }
    return *this;
  }

  PlanBuilder& base(std::vector<std::size_t> parts, Design d) {
    std::vector<Vertex> order = identity_order(d);
    return base(std::move(parts), std::move(d), std::move(order));
  }

  PlanBuilder& base(std::vector<std::size_t> parts, Design d, std::vector<Vertex> order) {
    plan_.bases.push_back({std::move(parts), std::move(d), std::move(order)});
    return *this;
  }

  // One base per part from `from` on, each joined with the parts in `shared`.
  PlanBuilder& each(std::size_t from, const std::vector<std::size_t>& shared, const Design& d) {
    for (std::size_t i = from; i < plan_.layout.parts.size(); ++i) {
      std::vector<std::size_t> parts = shared;
      parts.push_back(i);
      base(std::move(parts), d);
    }
    return *this;
  }

  PlanBuilder& each(std::size_t from, const std::vector<std::size_t>& shared, const Design& d,
                    const std::vector<Vertex>& order) {
    for (std::size_t i = from; i < plan_.layout.parts.size(); ++i) {
      std::vector<std::size_t> parts = shared;
      parts.push_back(i);
      base(std::move(parts), d, order);
    }
    return *this;
  }

  Plan finish() {
    if (next_ != n_) throw std::logic_error("layout parts do not add up to the order");
    const std::size_t t = plan_.layout.parts.size();
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = i + 1; j < t; ++j) plan_.layout.cross_pairs.emplace_back(i, j);
    }
    return std::move(plan_);
  }

 private:
  std::uint32_t n_;
  Vertex next_ = 0;
  Plan plan_;
};

Plan decomposition_plan(std::uint32_t n) {
  PlanBuilder b(n);
  const Design k13 = bundled(CatalogKind::Decomposition, 13);
  if (n % 6 == 0) {
    return b.part(6, n / 6).each(0, {}, catalog::k6_multidecomposition()).finish();
  }
  if (n % 12 == 1) {
    return b.part(1).part(12, n / 12).each(1, {0}, k13).finish();
  }
  if (n % 12 == 7) {
    const std::uint32_t k = n / 12;
    b.part(1).part(6).part(12, k).base({0, 1, 2}, bundled(CatalogKind::Decomposition, 19));
    return b.each(3, {0}, k13).finish();
  }
  if (n % 12 == 3) {
    const std::uint32_t k = n / 12;
    b.part(1).part(14).part(12, k - 1).base({0, 1}, bundled(CatalogKind::Decomposition, 15));
    return b.each(2, {0}, k13).finish();
  }
  if (n % 12 == 9) {
    b.part(1).part(8).part(12, n / 12).base({0, 1}, hexagons_k9());
    return b.each(2, {0}, k13).finish();
  }
  // n = 6x + 4
  b.part(10).part(6, (n - 10) / 6).base({0}, prisms_k10());
  return b.each(1, {}, catalog::k6_multidecomposition()).finish();
}

Plan packing_plan(std::uint32_t n) {
  PlanBuilder b(n);
  const Design k13 = bundled(CatalogKind::Decomposition, 13);
  switch (n) {
    case 7: return b.part(1).part(6).base({0, 1}, bundled(CatalogKind::Packing, 7)).finish();
    case 8: return b.part(8).base({0}, bundled(CatalogKind::Packing, 8)).finish();
    case 9: return b.part(1).part(8).base({0, 1}, bundled(CatalogKind::Packing, 9)).finish();
    case 10: return b.part(10).base({0}, packing_k10()).finish();
    default: break;
  }
  if (n % 6 == 2) {
    // The K_8 packing leaves {2,5}; send it to the K_2 = {0,1}.
    const Design k8 = bundled(CatalogKind::Packing, 8);
    std::vector<Vertex> order(8);
    const std::array<Vertex, 8> labels{2, 5, 0, 1, 3, 4, 6, 7};
    for (Vertex i = 0; i < 8; ++i) order[labels[i]] = i;
    return b.part(2).part(6, (n - 2) / 6).each(1, {0}, k8, order).finish();
  }
  if (n % 12 == 5) {
    b.part(1).part(16).part(12, n / 12 - 1).base({0, 1}, bundled(CatalogKind::Packing, 17));
    return b.each(2, {0}, k13).finish();
  }
  // n = 12k + 11
  b.part(1).part(10).part(12, n / 12).base({0, 1}, bundled(CatalogKind::Packing, 11));
  return b.each(2, {0}, k13).finish();
}

Plan covering_plan(std::uint32_t n) {
  PlanBuilder b(n);
  const Design k13 = bundled(CatalogKind::Decomposition, 13);
  switch (n) {
    case 7: return b.part(1).part(6).base({0, 1}, bundled(CatalogKind::Covering, 7)).finish();
    case 9: return b.part(1).part(8).base({0, 1}, covering_k9()).finish();
    case 10: return b.part(10).base({0}, covering_k10()).finish();
    default: break;
  }
  if (n % 6 == 2) {
    b.part(8).part(6, (n - 8) / 6).base({0}, bundled(CatalogKind::Covering, 8));
    return b.each(1, {}, catalog::k6_multidecomposition()).finish();
  }
  if (n % 12 == 5) {
    b.part(1).part(4).part(12, n / 12).base({0, 1, 2}, bundled(CatalogKind::Covering, 17));
    return b.each(3, {0}, k13).finish();
  }
  // n = 12k + 11
  b.part(1).part(4).part(6).part(12, n / 12).base({0, 1, 2}, bundled(CatalogKind::Covering, 11));
  return b.each(3, {0}, k13).finish();
}

Plan plan_for(std::uint32_t n, DesignKind kind) {
  const FeasibilityReport rep = classify(n);  // throws UnsupportedOrder below 6
  if (rep.decomposition_exists) return decomposition_plan(n);
  if (kind == DesignKind::Decomposition) throw InfeasibleOrder(rep);
  return kind == DesignKind::Packing ? packing_plan(n) : covering_plan(n);
}

std::vector<Vertex> part_vertices(const JoinPart& p) {
  std::vector<Vertex> v(p.size);
  std::iota(v.begin(), v.end(), p.first);
  return v;
}

void append_sorted(std::vector<Block>& out, std::vector<Block> piece) {
  for (Block& b : piece) b = canonical_form(b);
  std::sort(piece.begin(), piece.end());
  out.insert(out.end(), piece.begin(), piece.end());
}

Design assemble(std::uint32_t n, DesignKind kind, const Plan& plan) {
  const auto& parts = plan.layout.parts;
  Design out;
  out.host = Host::complete(n);
  out.kind = kind;

  std::vector<std::vector<bool>> joined(parts.size(), std::vector<bool>(parts.size(), false));
  for (const Base& base : plan.bases) {
    std::vector<Vertex> verts;
    for (std::size_t p : base.parts) {
      const auto pv = part_vertices(parts[p]);
      verts.insert(verts.end(), pv.begin(), pv.end());
      for (std::size_t q : base.parts) joined[p][q] = true;
    }
    std::sort(verts.begin(), verts.end());
    std::vector<Vertex> map(base.order.size());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = verts[base.order[i]];

    std::vector<Block> piece;
    piece.reserve(base.design.blocks.size());
    for (const Block& blk : base.design.blocks) piece.push_back(relabel(blk, map));
    append_sorted(out.blocks, std::move(piece));
    for (const Edge& e : base.design.leave) out.leave.push_back(relabel(e, map));
    for (const Edge& e : base.design.padding) out.padding.push_back(relabel(e, map));
  }
  for (const auto& [i, j] : plan.layout.cross_pairs) {
    if (joined[i][j]) continue;
    append_sorted(out.blocks, c6_decompose_bipartite({part_vertices(parts[i]), part_vertices(parts[j])}).blocks);
  }

  // Bases sharing the K_2 of a packing all leave its edge.
  std::sort(out.leave.begin(), out.leave.end());
  out.leave.erase(std::unique(out.leave.begin(), out.leave.end()), out.leave.end());
  std::sort(out.padding.begin(), out.padding.end());
  return out;
}

}  // namespace

InfeasibleOrder::InfeasibleOrder(FeasibilityReport report)
    : Error("K_" + std::to_string(report.n) + " has no hexagon/prism decomposition" +
            (report.notes.empty() ? std::string() : ": " + report.notes.front())),
      report_(std::move(report)) {}

JoinLayout join_layout(std::uint32_t n, DesignKind kind) { return plan_for(n, kind).layout; }

Design construct(std::uint32_t n, DesignKind kind) { return assemble(n, kind, plan_for(n, kind)); }

Design multidecompose(std::uint32_t n) { return construct(n, DesignKind::Decomposition); }
Design max_multipack(std::uint32_t n) { return construct(n, DesignKind::Packing); }
Design min_multicover(std::uint32_t n) { return construct(n, DesignKind::Covering); }

namespace {

void require(const Block& b, BlockType type, const char* what) {
  if (b.type() != type || !recognize(block_edges(b))) throw InvalidBlock(std::string(what) + ": " + to_string(b));
}

EdgeList sorted_edges(EdgeList e) {
  std::sort(e.begin(), e.end());
  return e;
}

}  // namespace

PrismMinusMatching prism_minus_matching(const Block& prism) {
  require(prism, BlockType::Prism, "prism_minus_matching needs a prism");
  const auto& v = prism.vertices();
  const Vertex a = v[0], b = v[1], c = v[2], d = v[3], e = v[4], f = v[5];
  return {Block::hexagon({b, c, a, d, f, e}), sorted_edges({Edge(a, b), Edge(c, f), Edge(d, e)})};
}

HexagonPlusFactor hexagon_plus_factor(const Block& hexagon) {
  require(hexagon, BlockType::Hexagon, "hexagon_plus_factor needs a hexagon");
  const auto& v = hexagon.vertices();
  const Vertex a = v[0], b = v[1], c = v[2], d = v[3], e = v[4], f = v[5];
  return {Block::prism({a, b, c}, {f, e, d}), sorted_edges({Edge(a, c), Edge(d, f), Edge(b, e)})};
}

PrismAsTwoHexagons prism_to_two_hexagons(const Block& prism) {
  require(prism, BlockType::Prism, "prism_to_two_hexagons needs a prism");
  const auto& v = prism.vertices();
  const Vertex a = v[0], b = v[1], c = v[2], d = v[3], e = v[4], f = v[5];
  return {Block::hexagon({a, b, c, f, e, d}), Block::hexagon({a, c, b, e, f, d}),
          sorted_edges({Edge(b, c), Edge(e, f), Edge(a, d)})};
}

}  // namespace multidesign
