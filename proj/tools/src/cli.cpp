#include "uprod/cli.hpp"

#include <filesystem>
#include <ostream>

#include "CLI11.hpp"
#include "uprod/classification.hpp"
#include "uprod/errors.hpp"
#include "uprod/examples.hpp"
#include "uprod/factorization.hpp"
#include "uprod/io.hpp"

namespace uprod::cli {

namespace fs = std::filesystem;
using io::Document;
using io::Kind;

namespace {

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::size_t cap = 100000;
};

void emit(Context& ctx, const Document& doc, const std::string& path) {
  if (path.empty()) {
    ctx.out << io::serialize(doc);
  } else {
    io::write_file(path, doc);
  }
}

/// Prints the table and optionally writes the machine-readable report.
int finish(Context& ctx, const Report& r, const Field& k, const std::string& report_path) {
  ctx.out << r;
  if (!report_path.empty()) io::write_file(report_path, Document{k, r});
  ctx.out << (r.all_passed() ? "result: PASS\n" : "result: FAIL\n");
  return r.all_passed() ? kOk : kChecksFailed;
}

int verify(Context& ctx, const std::string& file, const std::string& report_path) {
  const Document doc = io::read_file(file);
  switch (doc.kind()) {
    case Kind::extending_datum: {
      const ExtendingDatum& d = doc.as<ExtendingDatum>();
      Report shape = validate_datum(d);
      if (!shape.all_passed()) return finish(ctx, shape, doc.field, report_path);
      ctx.out << "datum well-formed (" << shape.checks().size() << " checks)\n";
      return finish(ctx, check_theorem1(d), doc.field, report_path);
    }
    case Kind::matched_pair:
      return finish(ctx, check_matched_pair(doc.as<MatchedPair>()), doc.field, report_path);
    case Kind::crossed_datum:
      return finish(ctx, check_crossed(doc.as<CrossedDatum>()), doc.field, report_path);
    case Kind::coalgebra:
      return finish(ctx, check_coalgebra(doc.as<Coalgebra>()), doc.field, report_path);
    case Kind::bialgebra:
      return finish(ctx, check_bialgebra(doc.as<Bialgebra>()), doc.field, report_path);
    case Kind::hopf:
      return finish(ctx, check_hopf(doc.as<Hopf>()), doc.field, report_path);
    default:
      throw FormatError(file + ": cannot verify a " + io::kind_name(doc.kind()) + " document");
  }
}

int build(Context& ctx, const std::string& file, const std::string& out_path) {
  const Document doc = io::read_file(file);
  io::expect_kind(doc, {Kind::extending_datum, Kind::matched_pair, Kind::crossed_datum}, file);
  UnifiedProduct p;
  try {
    if (doc.kind() == Kind::extending_datum) {
      p = build_unified_product(doc.as<ExtendingDatum>());
    } else if (doc.kind() == Kind::matched_pair) {
      p = build_bicrossed(doc.as<MatchedPair>());
    } else {
      p = build_crossed(doc.as<CrossedDatum>());
    }
  } catch (const PreconditionFailed& e) {
    ctx.out << e.report();
    ctx.err << "build: " << e.what() << '\n';
    return kChecksFailed;
  }
  if (p.antipode) {
    emit(ctx, Document{doc.field, Hopf{p.bialgebra, *p.antipode}}, out_path);
  } else {
    emit(ctx, Document{doc.field, p.bialgebra}, out_path);
  }
  return kOk;
}

int factorize_cmd(Context& ctx, const std::string& file, const std::string& sub_a, const std::string& sub_h,
                  const std::string& out_path) {
  const Document e = io::read_file(file);
  io::expect_kind(e, {Kind::bialgebra, Kind::hopf}, file);
  const Document a = io::read_file(sub_a);
  const Document h = io::read_file(sub_h);
  io::expect_kind(a, {Kind::linear_map}, sub_a);
  io::expect_kind(h, {Kind::linear_map}, sub_h);
  FactorizationInput fi;
  if (e.kind() == Kind::hopf) {
    fi.e = e.as<Hopf>().bialgebra;
    fi.e_antipode = e.as<Hopf>().antipode;
  } else {
    fi.e = e.as<Bialgebra>();
  }
  fi.incl_a = a.as<LinMap>();
  fi.incl_h = h.as<LinMap>();
  if (fi.incl_a.codomain_dim() != fi.e.dim() || fi.incl_h.codomain_dim() != fi.e.dim())
    throw FormatError("factorize: inclusion maps do not land in " + file);
  Report input = check_factorization_input(fi);
  if (!input.all_passed()) {
    ctx.out << input;
    return kChecksFailed;
  }
  try {
    Factorization f = factorize(fi);
    ctx.out << f.certificate;
    emit(ctx, Document{e.field, f.datum}, out_path);
    return f.certificate.all_passed() ? kOk : kChecksFailed;
  } catch (const NotFactorization& nf) {
    ctx.out << "not a factorization: rank deficit " << nf.rank_deficit() << '\n';
    return kChecksFailed;
  }
}

/// Extending datum of a datum, matched pair or crossed datum document.
ExtendingDatum as_datum(const Document& doc, const std::string& file) {
  io::expect_kind(doc, {Kind::extending_datum, Kind::matched_pair, Kind::crossed_datum}, file);
  if (doc.kind() == Kind::matched_pair) return matched_pair_datum(doc.as<MatchedPair>());
  if (doc.kind() == Kind::crossed_datum) return crossed_datum(doc.as<CrossedDatum>());
  return doc.as<ExtendingDatum>();
}

int equiv(Context& ctx, const std::string& f1, const std::string& f2, const std::string& cocycle_file, bool search,
          const std::string& out_path) {
  const Document d1 = io::read_file(f1);
  const Document d2 = io::read_file(f2);
  const ExtendingDatum base = as_datum(d1, f1);
  const ExtendingDatum primed = as_datum(d2, f2);
  if (base.dim_a() != primed.dim_a() || base.dim_h() != primed.dim_h())
    throw FormatError("equiv: the data do not share A and H");
  if (!search) {
    const Document u = io::read_file(cocycle_file);
    io::expect_kind(u, {Kind::cocycle}, cocycle_file);
    const LazyCocycle& c = u.as<LazyCocycle>();
    if (c.map.domain_dim() != base.dim_h() || c.map.codomain_dim() != base.dim_a())
      throw FormatError("equiv: cocycle shape does not match the data");
    EquivalenceResult r = check_equivalence(base, primed, c);
    return finish(ctx, r.report, d1.field, out_path);
  }
  std::vector<LazyCocycle> all;
  try {
    all = enumerate_cocycles(base.h, base.unit_h, base.a, ctx.cap);
  } catch (const Error& e) {
    ctx.err << "equiv: search undecided: " << e.what() << '\n';
    return kUndecided;
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!cohomologous_via(base, primed, all[i])) continue;
    ctx.out << "equivalent via cocycle " << i << " of " << all.size() << '\n';
    EquivalenceResult r = check_equivalence(base, primed, all[i]);
    ctx.out << r.report;
    if (!out_path.empty()) io::write_file(out_path, Document{d1.field, all[i]});
    return r.equivalent() ? kOk : kChecksFailed;
  }
  ctx.out << "no cocycle among " << all.size() << " candidates\n";
  return kChecksFailed;
}

std::string image_line(const LazyCocycle& u) {
  std::string line;
  for (Index x = 0; x < u.map.domain_dim(); ++x) {
    const SparseVec& col = u.map.column(x);
    if (!line.empty()) line += ", ";
    line += u.map.domain().label(x) + " -> " + (col.empty() ? "0" : u.map.codomain().label(col[0].index));
  }
  return line;
}

int enum_cocycles(Context& ctx, const std::string& h_file, const std::string& a_file, std::size_t basepoint,
                  const std::string& out_dir) {
  const Document h = io::read_file(h_file);
  const Document a = io::read_file(a_file);
  io::expect_kind(h, {Kind::coalgebra, Kind::bialgebra, Kind::hopf}, h_file);
  io::expect_kind(a, {Kind::bialgebra, Kind::hopf}, a_file);
  const Bialgebra& ab = a.kind() == Kind::hopf ? a.as<Hopf>().bialgebra : a.as<Bialgebra>();
  Coalgebra hc;
  SparseVec unit;
  if (h.kind() == Kind::coalgebra) {
    hc = h.as<Coalgebra>();
    if (basepoint >= hc.dim()) throw FormatError("enum-cocycles: basepoint out of range");
    unit = basis_vector(h.field, static_cast<Index>(basepoint));
  } else {
    const Bialgebra& hb = h.kind() == Kind::hopf ? h.as<Hopf>().bialgebra : h.as<Bialgebra>();
    hc = hb.coalgebra;
    unit = hb.algebra.unit;
  }
  std::vector<LazyCocycle> all;
  try {
    all = enumerate_cocycles(hc, unit, ab, ctx.cap);
  } catch (const Error& e) {
    ctx.err << "enum-cocycles: " << e.what() << '\n';
    return kUndecided;
  }
  ctx.out << all.size() << " cocycles\n";
  for (std::size_t i = 0; i < all.size(); ++i) {
    ctx.out << "  " << i << ": " << image_line(all[i]) << '\n';
    if (!out_dir.empty()) {
      fs::create_directories(out_dir);
      io::write_file(fs::path(out_dir) / ("cocycle_" + std::to_string(i) + ".json"), Document{h.field, all[i]});
    }
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{out, err};
  CLI::App app{"Exact unified products of bialgebras", "uprod"};
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();
  app.add_option("--cap", ctx.cap, "Upper bound on enumerated cocycles")->check(CLI::PositiveNumber);

  std::string file, file2, out_path, report_path, sub_a, sub_h, cocycle, out_dir, name;
  std::size_t basepoint = 0;
  bool search = false, list = false;

  auto* verify_cmd = app.add_subcommand("verify", "Check the axioms or conditions of a document");
  verify_cmd->add_option("file", file, "Document to check")->required();
  verify_cmd->add_option("--report", report_path, "Write the report document here");

  auto* build_cmd = app.add_subcommand("build", "Build the product of a datum, matched pair or crossed datum");
  build_cmd->add_option("file", file, "Datum document")->required();
  build_cmd->add_option("--out", out_path, "Output file (stdout when absent)");

  auto* fact_cmd = app.add_subcommand("factorize", "Recover a datum from a factorization of a bialgebra");
  fact_cmd->add_option("file", file, "Bialgebra or Hopf document")->required();
  fact_cmd->add_option("--sub-a", sub_a, "Inclusion of A as a linear-map document")->required();
  fact_cmd->add_option("--sub-h", sub_h, "Inclusion of H as a linear-map document")->required();
  fact_cmd->add_option("--out", out_path, "Output file (stdout when absent)");

  auto* equiv_cmd = app.add_subcommand("equiv", "Test whether two data are cohomologous");
  equiv_cmd->add_option("base", file, "Datum the morphism lands in")->required();
  equiv_cmd->add_option("primed", file2, "Datum the morphism starts from")->required();
  auto* cocycle_opt = equiv_cmd->add_option("--cocycle", cocycle, "Cocycle document");
  auto* search_opt = equiv_cmd->add_flag("--search", search, "Search all pointed maps (group-like case)");
  cocycle_opt->excludes(search_opt);
  equiv_cmd->add_option("--out", out_path, "Report file, or the found cocycle with --search");

  auto* enum_cmd = app.add_subcommand("enum-cocycles", "List every lazy cocycle H -> A in the group-like case");
  enum_cmd->add_option("h-file", file, "Coalgebra, bialgebra or Hopf document for H")->required();
  enum_cmd->add_option("a-file", file2, "Bialgebra or Hopf document for A")->required();
  enum_cmd->add_option("--basepoint", basepoint, "Basepoint of a bare coalgebra H");
  enum_cmd->add_option("--out-dir", out_dir, "Write one cocycle document per cocycle");

  auto* example_cmd = app.add_subcommand("example", "Emit a built-in corpus object");
  example_cmd->add_option("name", name, "Example name");
  example_cmd->add_flag("--list", list, "List the example names");
  example_cmd->add_option("--out", out_path, "Output file (stdout when absent)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kMalformedInput;
  }

  try {
    if (*verify_cmd) return verify(ctx, file, report_path);
    if (*build_cmd) return build(ctx, file, out_path);
    if (*fact_cmd) return factorize_cmd(ctx, file, sub_a, sub_h, out_path);
    if (*equiv_cmd) {
      if (!search && cocycle.empty()) throw FormatError("equiv: give --cocycle or --search");
      return equiv(ctx, file, file2, cocycle, search, out_path);
    }
    if (*enum_cmd) return enum_cocycles(ctx, file, file2, basepoint, out_dir);
    if (list) {
      for (const auto& n : io::example_names()) out << n << '\n';
      return kOk;
    }
    if (name.empty()) throw FormatError("example: give a name or --list");
    emit(ctx, io::example(name), out_path);
    return kOk;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const CapExceeded& e) {
    err << "undecided: " << e.what() << '\n';
    return kUndecided;
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kMalformedInput;
  }
}

}  // namespace uprod::cli
