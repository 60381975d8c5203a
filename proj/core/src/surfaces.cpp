#include "csinv/surfaces.hpp"

#include <stdexcept>

#include "csinv/error.hpp"

namespace csinv {

namespace {

void check_consistent(const ManifoldBlock& b, std::int64_t chi, std::int64_t tau) {
  // Constructor formulas must agree with chi = 2 - 2b1 + b2 and tau = b+ - b-.
  if (b.betti.euler() != chi || b.betti.signature() != tau ||
      (b.c1_squared && *b.c1_squared != 2 * chi + 3 * tau)) {
    throw std::logic_error("inconsistent characteristic numbers for " + b.name);
  }
}

}  // namespace

std::int64_t double_cover_geometric_genus(std::int64_t k) { return (k - 1) * (k - 2) / 2; }

std::int64_t hypersurface_geometric_genus(std::int64_t d) {
  if (d < 4) return 0;
  return (d - 1) * (d - 2) * (d - 3) / 6;
}

ManifoldBlock double_cover_cp2(std::int64_t k) {
  if (k < 3) {
    throw Error(ErrorKind::UnsupportedParameter,
                "double_cover_cp2 needs k >= 3 (branch degree >= 6), got k = " + std::to_string(k));
  }
  const std::int64_t c1sq = 2 * (k - 3) * (k - 3);
  const std::int64_t pg = double_cover_geometric_genus(k);
  const std::int64_t chi = 4 + (2 * k - 1) * (2 * k - 2);
  if ((c1sq - 2 * chi) % 3 != 0) throw std::logic_error("non-integral signature");
  const std::int64_t tau = (c1sq - 2 * chi) / 3;

  ManifoldBlock b;
  b.name = "DC" + std::to_string(2 * k);
  b.betti = {0, 2 * pg + 1, 2 * pg + 1 - tau};
  b.c1_squared = c1sq;
  b.flags.minimal_complex_surface = Tri::yes;
  b.flags.symplectic = Tri::yes;
  // c1 = (3-k) times the pulled-back hyperplane class, which is primitive
  b.flags.spin = (k % 2 == 1) ? Tri::yes : Tri::no;
  b.flags.sw_mod2_nonzero = Tri::yes;
  b.flags.admits_psc = Tri::no;
  b.flags.admits_nonneg_scalar = (k == 3) ? Tri::yes : Tri::no;
  b.flags.admits_asd_psc = Tri::no;
  b.provenance = "double cover of CP2 branched over a smooth curve of degree " +
                 std::to_string(2 * k) +
                 "; Kahler with b+ > 1, so the canonical class is a nonzero-SW monopole class"
                 " (no psc metric)";
  if (k == 3) b.provenance += "; K3 surface, Ricci-flat (Yau)";
  check_consistent(b, chi, tau);
  return b;
}

ManifoldBlock hypersurface_cp3(std::int64_t d) {
  if (d < 1) {
    throw Error(ErrorKind::UnsupportedParameter,
                "hypersurface_cp3 needs d >= 1, got d = " + std::to_string(d));
  }
  const std::int64_t c1sq = d * (d - 4) * (d - 4);
  const std::int64_t chi = d * d * d - 4 * d * d + 6 * d;
  const std::int64_t tau = -d * (d * d - 4) / 3;
  const std::int64_t pg = hypersurface_geometric_genus(d);

  ManifoldBlock b;
  b.name = "HS" + std::to_string(d);
  b.betti = {0, 2 * pg + 1, 2 * pg + 1 - tau};
  b.c1_squared = c1sq;
  b.flags.minimal_complex_surface = (d == 3) ? Tri::no : Tri::yes;
  b.flags.symplectic = Tri::yes;
  b.flags.spin = (d % 2 == 0) ? Tri::yes : Tri::no;
  b.flags.sw_mod2_nonzero = (d >= 4) ? Tri::yes : Tri::unknown;
  b.flags.admits_psc = (d <= 3) ? Tri::yes : Tri::no;
  b.flags.admits_nonneg_scalar = (d <= 4) ? Tri::yes : Tri::no;
  b.flags.admits_asd_psc = Tri::no;
  b.provenance = "smooth hypersurface of degree " + std::to_string(d) + " in CP3";
  if (d <= 3) b.provenance += "; Fano, admits positive Ricci curvature";
  if (d == 4) b.provenance += "; K3 surface, Ricci-flat (Yau)";
  if (d >= 5) b.provenance += "; general type, canonical class is a nonzero-SW monopole class";
  check_consistent(b, chi, tau);
  return b;
}

std::string Construction::to_string() const {
  switch (kind) {
    case Kind::double_cover_cp2: return "double_cover_cp2(" + std::to_string(parameters.at(0)) + ")";
    case Kind::hypersurface_cp3: return "hypersurface_cp3(" + std::to_string(parameters.at(0)) + ")";
    case Kind::user: return "user";
    case Kind::standard: break;
  }
  return "standard";
}

std::vector<CatalogEntry> standard_catalog() {
  using K = Construction::Kind;
  std::vector<CatalogEntry> out;

  ManifoldBlock s4;
  s4.name = std::string(kS4);
  s4.flags = {Tri::no, Tri::no, Tri::yes, Tri::unknown, Tri::yes, Tri::yes, Tri::yes};
  s4.provenance = "round metric: positive scalar curvature, conformally flat";
  s4.yamabe = ExactReal::pi(8, 1, 6);
  out.push_back({s4, {K::standard, {}}, "Yamabe invariant of the round sphere, 8π√6"});

  ManifoldBlock cp2;
  cp2.name = std::string(kCP2);
  cp2.betti = {0, 1, 0};
  cp2.c1_squared = 9;
  cp2.flags = {Tri::yes, Tri::yes, Tri::no, Tri::unknown, Tri::yes, Tri::yes, Tri::no};
  cp2.provenance = "Fubini-Study: Kahler-Einstein with positive scalar curvature";
  cp2.yamabe = ExactReal::pi(12, 1, 2);
  out.push_back({cp2, {K::standard, {}}, "Yamabe invariant realized by Fubini-Study, 12π√2"});

  ManifoldBlock cp2bar;
  cp2bar.name = std::string(kCP2bar);
  cp2bar.betti = {0, 0, 1};
  cp2bar.flags = {Tri::unknown, Tri::no, Tri::no, Tri::unknown, Tri::yes, Tri::yes, Tri::yes};
  cp2bar.provenance = "reversed Fubini-Study: anti-self-dual with positive scalar curvature";
  cp2bar.yamabe = ExactReal::pi(12, 1, 2);
  out.push_back({cp2bar, {K::standard, {}}, "same Yamabe invariant as CP2"});

  ManifoldBlock s1s3;
  s1s3.name = std::string(kS1xS3);
  s1s3.betti = {1, 0, 0};
  s1s3.c1_squared = 0;
  s1s3.flags = {Tri::unknown, Tri::no, Tri::yes, Tri::unknown, Tri::yes, Tri::yes, Tri::yes};
  s1s3.provenance = "Hopf surface; product metric is conformally flat with positive scalar curvature";
  out.push_back({s1s3, {K::standard, {}}, "standard block"});

  ManifoldBlock k3 = double_cover_cp2(3);
  k3.name = std::string(kK3);
  k3.provenance = "K3 surface: Ricci-flat Kahler (Yau), spin, SW invariant 1";
  out.push_back({k3, {K::standard, {}}, "standard block"});

  out.push_back({double_cover_cp2(4), {K::double_cover_cp2, {4}},
                 "double cover of CP2 branched over a smooth octic: p_g = 3, c1^2 = 2"});
  return out;
}

std::vector<DissolveAnnotation> standard_dissolve_annotations() {
  return {DissolveAnnotation{
      {{std::string(kDC8), false, 1}, {std::string(kDC8), true, 1}},
      44,
      44,
      "a branched cover of CP2 has a handle decomposition without 1- or 3-handles, so the "
      "non-spin sum with its reverse dissolves"}};
}

Catalog::Catalog() {
  for (auto& e : standard_catalog()) add(std::move(e));
  for (auto& d : standard_dissolve_annotations()) {
    BettiData total;
    for (const auto& p : d.parts) {
      BettiData b = block(p.name).betti;
      if (p.reversed) std::swap(b.b_plus, b.b_minus);
      total.b1 += p.multiplicity * b.b1;
      total.b_plus += p.multiplicity * b.b_plus;
      total.b_minus += p.multiplicity * b.b_minus;
    }
    if (!(total == BettiData{0, d.k, d.l})) {
      throw std::logic_error("dissolve annotation disagrees with Betti data");
    }
    dissolves_.push_back(std::move(d));
  }
}

void Catalog::add(CatalogEntry entry) {
  validate_block(entry.block);
  const std::string name = entry.block.name;
  if (entries_.count(name)) {
    throw Error(ErrorKind::CatalogError, "duplicate block name '" + name + "'");
  }
  entries_.emplace(name, std::move(entry));
  order_.push_back(name);
}

void Catalog::merge(const std::vector<CatalogEntry>& entries) {
  for (const auto& e : entries) add(e);
}

const CatalogEntry* Catalog::find(std::string_view name) const {
  auto it = entries_.find(name);
  return it == entries_.end() ? nullptr : &it->second;
}

const ManifoldBlock& Catalog::block(std::string_view name) const {
  const CatalogEntry* e = find(name);
  if (!e) throw Error(ErrorKind::UnknownBlock, "no block named '" + std::string(name) + "'");
  return e->block;
}

std::vector<const CatalogEntry*> Catalog::entries() const {
  std::vector<const CatalogEntry*> out;
  for (const auto& name : order_) out.push_back(&entries_.at(name));
  return out;
}

bool is_k3(const ManifoldBlock& block) {
  if (block.orientation_reversed) return false;
  return block.name == kK3 || block.name == "HS4" || block.name == "DC6";
}

}  // namespace csinv
