#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "csinv/error.hpp"
#include "csinv/surfaces.hpp"

namespace csinv {

namespace {

struct FlagKey {
  std::string_view key;
  Tri BlockFlags::*field;
};

constexpr FlagKey kFlagKeys[] = {
    {"minimal", &BlockFlags::minimal_complex_surface},
    {"symplectic", &BlockFlags::symplectic},
    {"spin", &BlockFlags::spin},
    {"sw2", &BlockFlags::sw_mod2_nonzero},
    {"psc", &BlockFlags::admits_psc},
    {"nonneg", &BlockFlags::admits_nonneg_scalar},
    {"asdpsc", &BlockFlags::admits_asd_psc},
};

std::int64_t parse_int(std::string_view token, std::size_t line, std::string_view what) {
  std::int64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw Error(ErrorKind::CatalogError, "line " + std::to_string(line) + ": " + std::string(what) +
                                             " must be an exact integer, got '" +
                                             std::string(token) + "'");
  }
  return value;
}

BlockFlags parse_flags(std::string_view text, std::size_t line) {
  BlockFlags flags;
  if (text == "-") return flags;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::CatalogError,
                  "line " + std::to_string(line) + ": flag '" + std::string(item) + "' needs key=value");
    }
    const std::string_view key = item.substr(0, eq);
    bool known = false;
    for (const auto& fk : kFlagKeys) {
      if (fk.key == key) {
        flags.*fk.field = parse_tri(item.substr(eq + 1));
        known = true;
      }
    }
    if (!known) {
      throw Error(ErrorKind::CatalogError,
                  "line " + std::to_string(line) + ": unknown flag '" + std::string(key) + "'");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return flags;
}

std::string short_tri(Tri t) {
  switch (t) {
    case Tri::yes: return "y";
    case Tri::no: return "n";
    case Tri::unknown: return "?";
  }
  return "?";
}

}  // namespace

std::vector<CatalogEntry> parse_catalog(std::string_view text) {
  std::vector<CatalogEntry> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos || raw[first] == '#') continue;

    std::istringstream fields(raw);
    std::string name, b1, bp, bm, c1, flags;
    if (!(fields >> name >> b1 >> bp >> bm >> c1 >> flags)) {
      throw Error(ErrorKind::CatalogError,
                  "line " + std::to_string(line_no) + ": expected name b1 b+ b- c1^2 flags [provenance]");
    }
    std::string provenance;
    std::getline(fields, provenance);
    const auto p0 = provenance.find_first_not_of(" \t");
    const auto p1 = provenance.find_last_not_of(" \t\r");
    provenance = p0 == std::string::npos ? "" : provenance.substr(p0, p1 - p0 + 1);

    CatalogEntry e;
    e.block.name = name;
    e.block.betti = {parse_int(b1, line_no, "b1"), parse_int(bp, line_no, "b+"),
                     parse_int(bm, line_no, "b-")};
    if (c1 != "-") e.block.c1_squared = parse_int(c1, line_no, "c1^2");
    e.block.flags = parse_flags(flags, line_no);
    e.block.provenance = provenance;
    e.construction = {Construction::Kind::user, {}};
    e.citation_note = "user catalog line " + std::to_string(line_no);
    try {
      validate_block(e.block);
    } catch (const Error& err) {
      throw Error(ErrorKind::CatalogError, "line " + std::to_string(line_no) + ": " + err.what());
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CatalogEntry> load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::CatalogError, "cannot open catalog file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str());
}

std::string render_catalog(const std::vector<const CatalogEntry*>& entries) {
  std::ostringstream os;
  os << std::left << std::setw(10) << "# name" << std::right << std::setw(4) << "b1" << std::setw(5)
     << "b+" << std::setw(5) << "b-" << std::setw(6) << "c1^2" << "  " << std::left << std::setw(60)
     << "flags" << ' ' << "provenance\n";
  for (const CatalogEntry* e : entries) {
    const ManifoldBlock& b = e->block;
    std::string flags;
    for (const auto& fk : kFlagKeys) {
      if (!flags.empty()) flags += ',';
      flags += std::string(fk.key) + "=" + short_tri(b.flags.*fk.field);
    }
    os << std::left << std::setw(10) << b.name << std::right << std::setw(4) << b.betti.b1
       << std::setw(5) << b.betti.b_plus << std::setw(5) << b.betti.b_minus << std::setw(6)
       << (b.c1_squared ? std::to_string(*b.c1_squared) : std::string("-")) << "  " << std::left
       << std::setw(60) << flags << ' ' << b.provenance << '\n';
  }
  return os.str();
}

}  // namespace csinv
