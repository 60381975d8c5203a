#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "csinv/topology.hpp"

namespace csinv {

/// Double cover of CP^2 branched along a smooth curve of degree 2k.
/// Requires k >= 3; k = 3 is a K3 surface.
ManifoldBlock double_cover_cp2(std::int64_t k);

/// Smooth hypersurface of degree d in CP^3. Requires d >= 1.
ManifoldBlock hypersurface_cp3(std::int64_t d);

/// Geometric genus of the double cover: (k-1)(k-2)/2.
std::int64_t double_cover_geometric_genus(std::int64_t k);
/// Geometric genus of the degree-d hypersurface: C(d-1, 3).
std::int64_t hypersurface_geometric_genus(std::int64_t d);

struct Construction {
  enum class Kind { standard, double_cover_cp2, hypersurface_cp3, user };
  Kind kind = Kind::standard;
  std::vector<std::int64_t> parameters;

  std::string to_string() const;
};

struct CatalogEntry {
  ManifoldBlock block;
  Construction construction;
  std::string citation_note;
};

/// A recorded diffeomorphism from a connected sum of catalog blocks to
/// k CP^2 # l CP^2bar. Stored, never derived.
struct DissolveAnnotation {
  struct Part {
    std::string name;
    bool reversed = false;
    std::int64_t multiplicity = 1;
  };
  std::vector<Part> parts;
  std::int64_t k = 0;
  std::int64_t l = 0;
  std::string note;
};

std::vector<CatalogEntry> standard_catalog();
std::vector<DissolveAnnotation> standard_dissolve_annotations();

/// Built-in catalog plus optional user entries. Name collisions are errors.
class Catalog {
 public:
  /// The built-in catalog with its dissolve annotations.
  Catalog();

  void add(CatalogEntry entry);
  void merge(const std::vector<CatalogEntry>& entries);

  const CatalogEntry* find(std::string_view name) const;
  const ManifoldBlock& block(std::string_view name) const;  // throws UnknownBlock
  std::vector<const CatalogEntry*> entries() const;
  const std::vector<DissolveAnnotation>& dissolve_annotations() const { return dissolves_; }

 private:
  std::map<std::string, CatalogEntry, std::less<>> entries_;
  std::vector<std::string> order_;
  std::vector<DissolveAnnotation> dissolves_;
};

/// Whether the block is one of the catalog's K3 realizations.
bool is_k3(const ManifoldBlock& block);

/// Named standard blocks used by rewrite rules.
inline constexpr std::string_view kS4 = "S4";
inline constexpr std::string_view kCP2 = "CP2";
inline constexpr std::string_view kCP2bar = "CP2bar";
inline constexpr std::string_view kS1xS3 = "S1xS3";
inline constexpr std::string_view kK3 = "K3";
inline constexpr std::string_view kDC8 = "DC8";

/// Parses the plain-text block table:
///
///   # name  b1  b+  b-  c1^2  flags                   provenance...
///   G       0   11  43  16    spin=y,symplectic=y,sw2=y  manual entry
///
/// `c1^2` is an integer or '-'; flags are comma-separated key=value pairs
/// (keys: minimal, symplectic, spin, sw2, psc, nonneg, asdpsc; values
/// y/n/?) or '-'. Everything after the flags column is provenance.
std::vector<CatalogEntry> parse_catalog(std::string_view text);
std::vector<CatalogEntry> load_catalog_file(const std::string& path);
std::string render_catalog(const std::vector<const CatalogEntry*>& entries);

}  // namespace csinv
