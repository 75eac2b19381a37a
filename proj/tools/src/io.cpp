#include "uprod/io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "uprod/errors.hpp"

namespace uprod::io {

using Json = nlohmann::json;
using Dims = std::vector<std::size_t>;

namespace {

constexpr std::array<std::string_view, 10> kKindNames{
    "coalgebra",    "bialgebra",  "hopf",    "extending-datum", "matched-pair",
    "crossed-datum", "group-table", "cocycle", "linear-map",      "report"};

// Arrays of scalars stay on one line, everything else is indented.
void emit(const Json& j, std::size_t indent, std::string& out) {
  const std::string pad(indent, ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += pad + "  " + Json(it.key()).dump() + ": ";
      emit(it.value(), indent + 2, out);
    }
    out += "\n" + pad + "}";
    return;
  }
  const bool flat = !j.is_array() || std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); });
  if (flat) {
    out += j.dump();
    return;
  }
  out += "[\n";
  for (std::size_t i = 0; i < j.size(); ++i) {
    out += pad + "  ";
    emit(j[i], indent + 2, out);
    out += i + 1 < j.size() ? ",\n" : "\n";
  }
  out += pad + "]";
}

std::size_t product(const Dims& d) {
  std::size_t n = 1;
  for (std::size_t x : d) n *= x;
  return n;
}

void unravel(std::size_t idx, const Dims& dims, Json& out) {
  std::vector<std::size_t> parts(dims.size());
  for (std::size_t i = dims.size(); i-- > 0;) {
    parts[i] = idx % dims[i];
    idx /= dims[i];
  }
  for (std::size_t p : parts) out.push_back(p);
}

Json encode_map(const LinMap& f, const Dims& in, const Dims& out) {
  if (product(in) != f.domain_dim() || product(out) != f.codomain_dim())
    throw std::logic_error("map shape does not match its role");
  Json entries = Json::array();
  for (Index c = 0; c < f.domain_dim(); ++c)
    for (const Term& t : f.column(c)) {
      Json e = Json::array();
      unravel(c, in, e);
      unravel(t.index, out, e);
      e.push_back(t.coeff.numerator().get_str());
      e.push_back(t.coeff.denominator().get_str());
      entries.push_back(std::move(e));
    }
  return Json{{"in", in}, {"out", out}, {"entries", std::move(entries)}};
}

Json encode_vector(const Field& k, const SparseVec& v, const BasedSpace& space) {
  return encode_map(LinMap::point(k, space, v), {}, {space.dim()});
}

[[noreturn]] void fail(const std::string& what) { throw FormatError(what); }

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where + ": missing \"" + key + "\"");
  return *it;
}

std::size_t get_index(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned()) fail(where + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

mpz_class get_integer(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where + ": expected a decimal string");
  const std::string s = j.get<std::string>();
  const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
  if (s.size() == start || !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                                        [](char c) { return c >= '0' && c <= '9'; }))
    fail(where + ": \"" + s + "\" is not an integer");
  return mpz_class(s, 10);
}

Scalar get_scalar(const Json& num_j, const Json& den_j, const Field& k, const std::string& where) {
  const mpz_class num = get_integer(num_j, where);
  const mpz_class den = get_integer(den_j, where);
  if (den <= 0) fail(where + ": denominator must be positive");
  if (num == 0) fail(where + ": zero entries are not stored");
  if (k.is_rational()) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) fail(where + ": fraction is not reduced");
  } else if (den != 1 || num < 0 || num >= k.modulus()) {
    fail(where + ": residue must be written in [1, p) over 1");
  }
  return k.from_fraction(num, den);
}

Dims get_dims(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where + ": expected an array of dimensions");
  Dims out;
  for (const Json& e : j) out.push_back(get_index(e, where));
  return out;
}

std::string dims_string(const Dims& d) { return Json(d).dump(); }

LinMap decode_map(const Json& j, const Field& k, const BasedSpace& dom, const BasedSpace& cod, const Dims& in,
                  const Dims& out, const std::string& name) {
  const Dims jin = get_dims(member(j, "in", name), name);
  const Dims jout = get_dims(member(j, "out", name), name);
  if (jin != in || jout != out)
    fail(name + ": shape " + dims_string(jin) + " -> " + dims_string(jout) + ", expected " + dims_string(in) + " -> " +
         dims_string(out));
  const Json& entries = member(j, "entries", name);
  if (!entries.is_array()) fail(name + ": entries must be an array");
  std::vector<SparseVec> cols(product(in));
  for (const Json& e : entries) {
    if (!e.is_array() || e.size() != in.size() + out.size() + 2)
      fail(name + ": entry " + e.dump() + " has the wrong length");
    std::size_t col = 0, row = 0;
    for (std::size_t i = 0; i < in.size() + out.size(); ++i) {
      const std::size_t dim = i < in.size() ? in[i] : out[i - in.size()];
      const std::size_t v = get_index(e[i], name);
      if (v >= dim) fail(name + ": index out of range in entry " + e.dump());
      (i < in.size() ? col : row) = (i < in.size() ? col : row) * dim + v;
    }
    const std::size_t n = e.size();
    cols[col].push_back(Term{static_cast<Index>(row), get_scalar(e[n - 2], e[n - 1], k, name)});
  }
  for (SparseVec& c : cols) {
    std::stable_sort(c.begin(), c.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
    for (std::size_t i = 1; i < c.size(); ++i)
      if (c[i].index == c[i - 1].index) fail(name + ": duplicate entry");
  }
  return LinMap(k, dom, cod, std::move(cols));
}

SparseVec decode_vector(const Json& j, const Field& k, const BasedSpace& space, const std::string& name) {
  return decode_map(j, k, BasedSpace::ground(), space, {}, {space.dim()}, name).column(0);
}

// Payload sections for the three algebraic kinds.

Json coalgebra_payload(const Coalgebra& c) {
  const std::size_t n = c.dim();
  return Json{{"dim", n}, {"delta", encode_map(c.delta, {n}, {n, n})}, {"counit", encode_map(c.counit, {n}, {})}};
}

Json bialgebra_payload(const Bialgebra& b) {
  const std::size_t n = b.dim();
  Json j = coalgebra_payload(b.coalgebra);
  j["mult"] = encode_map(b.algebra.mult, {n, n}, {n});
  j["unit"] = encode_vector(b.field(), b.algebra.unit, b.space());
  return j;
}

Json with_antipode(Json j, const std::optional<LinMap>& s) {
  if (s) j["antipode"] = encode_map(*s, {s->domain_dim()}, {s->codomain_dim()});
  return j;
}

void check_dim(const Json& j, const BasedSpace& space, const std::string& name) {
  const std::size_t n = get_index(member(j, "dim", name), name);
  if (n != space.dim())
    fail(name + ": dim " + std::to_string(n) + " but " + std::to_string(space.dim()) + " labels");
}

Coalgebra decode_coalgebra(const Json& j, const Field& k, const BasedSpace& v, const std::string& name) {
  check_dim(j, v, name);
  const std::size_t n = v.dim();
  return Coalgebra{v, decode_map(member(j, "delta", name), k, v, tensor_space(v, v), {n}, {n, n}, name + ".delta"),
                   decode_map(member(j, "counit", name), k, v, BasedSpace::ground(), {n}, {}, name + ".counit")};
}

Bialgebra decode_bialgebra(const Json& j, const Field& k, const BasedSpace& v, const std::string& name) {
  Coalgebra c = decode_coalgebra(j, k, v, name);
  const std::size_t n = v.dim();
  Algebra a{v, decode_map(member(j, "mult", name), k, tensor_space(v, v), v, {n, n}, {n}, name + ".mult"),
            decode_vector(member(j, "unit", name), k, v, name + ".unit")};
  return Bialgebra{std::move(c), std::move(a)};
}

std::optional<LinMap> decode_antipode(const Json& j, const Field& k, const BasedSpace& v, const std::string& name) {
  if (!j.contains("antipode")) return std::nullopt;
  return decode_map(j["antipode"], k, v, v, {v.dim()}, {v.dim()}, name + ".antipode");
}

BasedSpace space_from(const Json& labels, const char* key) {
  const Json& l = member(labels, key, "labels");
  if (!l.is_array() || !std::all_of(l.begin(), l.end(), [](const Json& e) { return e.is_string(); }))
    fail(std::string("labels.") + key + ": expected an array of strings");
  try {
    return BasedSpace(l.get<std::vector<std::string>>());
  } catch (const Error& e) {
    fail(std::string("labels.") + key + ": " + e.what());
  }
}

Json report_payload(const Report& r) {
  Json checks = Json::array();
  for (const CheckResult& c : r.checks())
    checks.push_back(Json{{"id", c.id}, {"passed", c.passed}, {"witness", c.witness}, {"detail", c.detail}});
  return Json{{"subject", r.subject()}, {"passed", r.all_passed()}, {"checks", std::move(checks)}};
}

Report decode_report(const Json& j) {
  const Json& subject = member(j, "subject", "report");
  if (!subject.is_string()) fail("report.subject: expected a string");
  Report r(subject.get<std::string>());
  const Json& checks = member(j, "checks", "report");
  if (!checks.is_array()) fail("report.checks: expected an array");
  for (const Json& c : checks) {
    CheckResult cr;
    const Json& id = member(c, "id", "report.checks");
    const Json& passed = member(c, "passed", "report.checks");
    const Json& detail = member(c, "detail", "report.checks");
    if (!id.is_string() || !passed.is_boolean() || !detail.is_string()) fail("report.checks: bad field types");
    cr.id = id.get<std::string>();
    cr.passed = passed.get<bool>();
    cr.detail = detail.get<std::string>();
    for (std::size_t w : get_dims(member(c, "witness", "report.checks"), "report.checks.witness"))
      cr.witness.push_back(static_cast<std::uint32_t>(w));
    r.add(std::move(cr));
  }
  const Json& passed = member(j, "passed", "report");
  if (!passed.is_boolean() || passed.get<bool>() != r.all_passed()) fail("report.passed disagrees with the checks");
  return r;
}

struct Encoded {
  Json payload;
  Json labels;
};

Encoded encode(const Object& obj) {
  auto labels_of = [](const BasedSpace& s) { return Json(s.labels()); };
  return std::visit(
      [&](const auto& x) -> Encoded {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Coalgebra>) {
          return {coalgebra_payload(x), Json{{"V", labels_of(x.space)}}};
        } else if constexpr (std::is_same_v<T, Bialgebra>) {
          return {bialgebra_payload(x), Json{{"V", labels_of(x.space())}}};
        } else if constexpr (std::is_same_v<T, Hopf>) {
          return {with_antipode(bialgebra_payload(x.bialgebra), x.antipode), Json{{"V", labels_of(x.bialgebra.space())}}};
        } else if constexpr (std::is_same_v<T, ExtendingDatum>) {
          const std::size_t na = x.dim_a(), nh = x.dim_h();
          Json p{{"A", with_antipode(bialgebra_payload(x.a), x.a_antipode)},
                 {"H", coalgebra_payload(x.h)},
                 {"unit_H", encode_vector(x.field(), x.unit_h, x.h.space)},
                 {"dot", encode_map(x.dot, {nh, nh}, {nh})},
                 {"ract", encode_map(x.ract, {nh, na}, {nh})},
                 {"lact", encode_map(x.lact, {nh, na}, {na})},
                 {"cocycle", encode_map(x.cocycle, {nh, nh}, {na})}};
          return {std::move(p), Json{{"A", labels_of(x.a.space())}, {"H", labels_of(x.h.space)}}};
        } else if constexpr (std::is_same_v<T, MatchedPair>) {
          const std::size_t na = x.a.dim(), nh = x.h.dim();
          Json p{{"A", with_antipode(bialgebra_payload(x.a), x.a_antipode)},
                 {"H", with_antipode(bialgebra_payload(x.h), x.h_antipode)},
                 {"ract", encode_map(x.ract, {nh, na}, {nh})},
                 {"lact", encode_map(x.lact, {nh, na}, {na})}};
          return {std::move(p), Json{{"A", labels_of(x.a.space())}, {"H", labels_of(x.h.space())}}};
        } else if constexpr (std::is_same_v<T, CrossedDatum>) {
          const std::size_t na = x.a.dim(), nh = x.h.dim();
          Json p{{"A", with_antipode(bialgebra_payload(x.a), x.a_antipode)},
                 {"H", bialgebra_payload(x.h)},
                 {"lact", encode_map(x.lact, {nh, na}, {na})},
                 {"cocycle", encode_map(x.cocycle, {nh, nh}, {na})}};
          return {std::move(p), Json{{"A", labels_of(x.a.space())}, {"H", labels_of(x.h.space())}}};
        } else if constexpr (std::is_same_v<T, GroupTable>) {
          Json mult = Json::array();
          for (Index a = 0; a < x.order(); ++a) {
            Json row = Json::array();
            for (Index b = 0; b < x.order(); ++b) row.push_back(x.mul(a, b));
            mult.push_back(std::move(row));
          }
          return {Json{{"order", x.order()}, {"mult", std::move(mult)}}, Json{{"G", x.labels()}}};
        } else if constexpr (std::is_same_v<T, LazyCocycle>) {
          const LinMap& u = x.map;
          return {Json{{"map", encode_map(u, {u.domain_dim()}, {u.codomain_dim()})}},
                  Json{{"H", labels_of(u.domain())}, {"A", labels_of(u.codomain())}}};
        } else if constexpr (std::is_same_v<T, LinMap>) {
          return {Json{{"map", encode_map(x, {x.domain_dim()}, {x.codomain_dim()})}},
                  Json{{"domain", labels_of(x.domain())}, {"codomain", labels_of(x.codomain())}}};
        } else {
          return {report_payload(x), Json::object()};
        }
      },
      obj);
}

Object decode(Kind kind, const Json& p, const Json& labels, const Field& k) {
  switch (kind) {
    case Kind::coalgebra:
      return decode_coalgebra(p, k, space_from(labels, "V"), "payload");
    case Kind::bialgebra:
      return decode_bialgebra(p, k, space_from(labels, "V"), "payload");
    case Kind::hopf: {
      const BasedSpace v = space_from(labels, "V");
      std::optional<LinMap> s = decode_antipode(p, k, v, "payload");
      if (!s) fail("payload: a hopf document needs an antipode");
      return Hopf{decode_bialgebra(p, k, v, "payload"), *s};
    }
    case Kind::extending_datum: {
      const BasedSpace av = space_from(labels, "A"), hv = space_from(labels, "H");
      const std::size_t na = av.dim(), nh = hv.dim();
      const BasedSpace ha = tensor_space(hv, av), hh = tensor_space(hv, hv);
      const Json& pa = member(p, "A", "payload");
      return ExtendingDatum{decode_bialgebra(pa, k, av, "A"),
                            decode_antipode(pa, k, av, "A"),
                            decode_coalgebra(member(p, "H", "payload"), k, hv, "H"),
                            decode_vector(member(p, "unit_H", "payload"), k, hv, "unit_H"),
                            decode_map(member(p, "dot", "payload"), k, hh, hv, {nh, nh}, {nh}, "dot"),
                            decode_map(member(p, "ract", "payload"), k, ha, hv, {nh, na}, {nh}, "ract"),
                            decode_map(member(p, "lact", "payload"), k, ha, av, {nh, na}, {na}, "lact"),
                            decode_map(member(p, "cocycle", "payload"), k, hh, av, {nh, nh}, {na}, "cocycle")};
    }
    case Kind::matched_pair: {
      const BasedSpace av = space_from(labels, "A"), hv = space_from(labels, "H");
      const std::size_t na = av.dim(), nh = hv.dim();
      const BasedSpace ha = tensor_space(hv, av);
      const Json& pa = member(p, "A", "payload");
      const Json& ph = member(p, "H", "payload");
      return MatchedPair{decode_bialgebra(pa, k, av, "A"),
                         decode_bialgebra(ph, k, hv, "H"),
                         decode_map(member(p, "ract", "payload"), k, ha, hv, {nh, na}, {nh}, "ract"),
                         decode_map(member(p, "lact", "payload"), k, ha, av, {nh, na}, {na}, "lact"),
                         decode_antipode(pa, k, av, "A"),
                         decode_antipode(ph, k, hv, "H")};
    }
    case Kind::crossed_datum: {
      const BasedSpace av = space_from(labels, "A"), hv = space_from(labels, "H");
      const std::size_t na = av.dim(), nh = hv.dim();
      const Json& pa = member(p, "A", "payload");
      return CrossedDatum{
          decode_bialgebra(pa, k, av, "A"), decode_bialgebra(member(p, "H", "payload"), k, hv, "H"),
          decode_map(member(p, "lact", "payload"), k, tensor_space(hv, av), av, {nh, na}, {na}, "lact"),
          decode_map(member(p, "cocycle", "payload"), k, tensor_space(hv, hv), av, {nh, nh}, {na}, "cocycle"),
          decode_antipode(pa, k, av, "A")};
    }
    case Kind::group_table: {
      const std::size_t n = get_index(member(p, "order", "payload"), "order");
      const Json& mult = member(p, "mult", "payload");
      if (!mult.is_array() || mult.size() != n) fail("mult: expected " + std::to_string(n) + " rows");
      std::vector<std::vector<Index>> table;
      for (const Json& row : mult) {
        const Dims r = get_dims(row, "mult");
        if (r.size() != n || std::any_of(r.begin(), r.end(), [&](std::size_t v) { return v >= n; }))
          fail("mult: bad row " + row.dump());
        table.emplace_back(r.begin(), r.end());
      }
      const BasedSpace g = space_from(labels, "G");
      if (g.dim() != n) fail("labels.G: expected " + std::to_string(n) + " labels");
      try {
        return GroupTable(std::move(table), g.labels());
      } catch (const PreconditionFailed& e) {
        fail(std::string("mult: ") + e.what());
      }
    }
    case Kind::cocycle: {
      const BasedSpace hv = space_from(labels, "H"), av = space_from(labels, "A");
      return LazyCocycle{decode_map(member(p, "map", "payload"), k, hv, av, {hv.dim()}, {av.dim()}, "map")};
    }
    case Kind::linear_map: {
      const BasedSpace d = space_from(labels, "domain"), c = space_from(labels, "codomain");
      return decode_map(member(p, "map", "payload"), k, d, c, {d.dim()}, {c.dim()}, "map");
    }
    case Kind::report:
      return decode_report(p);
  }
  fail("unknown kind");
}

}  // namespace

std::string kind_name(Kind kind) { return std::string(kKindNames.at(static_cast<std::size_t>(kind))); }

Kind parse_kind(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i)
    if (kKindNames[i] == name) return static_cast<Kind>(i);
  fail("unknown kind \"" + std::string(name) + "\"");
}

std::string serialize(const Document& doc) {
  Encoded e = encode(doc.object);
  Json j{{"format_version", std::string(kFormatVersion)},
         {"field", doc.field.descriptor()},
         {"kind", kind_name(doc.kind())},
         {"payload", std::move(e.payload)},
         {"labels", std::move(e.labels)}};
  std::string out;
  emit(j, 0, out);
  out += '\n';
  return out;
}

Document parse(std::string_view text) {
  try {
    const Json j = Json::parse(text);
    if (!j.is_object()) fail("document: expected an object");
    for (auto it = j.begin(); it != j.end(); ++it)
      if (it.key() != "format_version" && it.key() != "field" && it.key() != "kind" && it.key() != "payload" &&
          it.key() != "labels")
        fail("document: unknown key \"" + it.key() + "\"");
    const Json& version = member(j, "format_version", "document");
    if (!version.is_string() || version.get<std::string>() != kFormatVersion)
      fail("document: unsupported format_version " + version.dump());
    const Json& field = member(j, "field", "document");
    const Json& kind = member(j, "kind", "document");
    if (!field.is_string() || !kind.is_string()) fail("document: field and kind must be strings");
    Field k = Field::parse(field.get<std::string>());
    return Document{k, decode(parse_kind(kind.get<std::string>()), member(j, "payload", "document"),
                              member(j, "labels", "document"), k)};
  } catch (const FormatError&) {
    throw;
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed document: ") + e.what());
  } catch (const Error& e) {
    throw FormatError(std::string("inconsistent document: ") + e.what());
  }
}

Document read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse(ss.str());
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_file(const std::filesystem::path& path, const Document& doc) {
  const std::string text = serialize(doc);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("cannot write " + path.string());
}

void expect_kind(const Document& doc, std::initializer_list<Kind> kinds, const std::string& what) {
  if (std::find(kinds.begin(), kinds.end(), doc.kind()) != kinds.end()) return;
  std::string names;
  for (Kind k : kinds) names += (names.empty() ? "" : " or ") + kind_name(k);
  fail(what + ": expected " + names + ", got " + kind_name(doc.kind()));
}

}  // namespace uprod::io
