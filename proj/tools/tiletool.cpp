// Command-line front end: region generation, piece censuses, bin-packing
// verdicts, LP export, certificate verification, small exact solves, and the
// brute-force oracle.  Exit codes: 0 completed, 2 non-tile certified,
// 3 inconclusive, 4 input error.

#include "f2tile/binpack.hpp"
#include "f2tile/exactlp.hpp"
#include "f2tile/farkas.hpp"
#include "f2tile/gf2.hpp"
#include "f2tile/ideal.hpp"
#include "f2tile/lpmodel.hpp"
#include "f2tile/oracle.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kExitDone = 0;
constexpr int kExitNonTile = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitInputError = 4;

std::string data_path(const std::string& file) {
  return std::string(F2TILE_DATA_DIR) + "/" + file;
}

f2tile::Region load_region(const std::string& path, int k) {
  if (!path.empty()) return f2tile::read_region_file(path);
  if (k >= 0) return f2tile::table1_region(k);
  throw std::runtime_error("no region given: use --region or --k");
}

int cmd_ideal(int k, const std::string& genFile) {
  f2tile::Region V;
  if (!genFile.empty()) {
    std::ifstream in(genFile);
    if (!in) throw std::runtime_error("cannot open " + genFile);
    auto [n, gens] = f2tile::read_generators(in);
    V = f2tile::to_region(f2tile::ideal_from_generators(gens, n));
  } else {
    V = f2tile::table1_region(k);
  }
  f2tile::write_region(std::cout, V);
  std::cout << "#RESULT ideal n=" << V.n() << " size=" << V.size() << "\n";
  return kExitDone;
}

void print_census(const f2tile::Region& V, int r) {
  auto census = f2tile::piece_census(V, f2tile::Projection::tail(V.n(), r));
  std::cout << "r=" << r << " binSize=" << census.binSize
            << " census=" << f2tile::census_to_string(census) << "\n";
  std::cout << "#RESULT census r=" << r << " binSize=" << census.binSize
            << " census=\"" << f2tile::census_to_string(census) << "\"\n";
}

int cmd_census(const f2tile::Region& V, int r, bool sweep) {
  if (sweep) {
    for (int rr = 1; rr < V.n(); ++rr) print_census(V, rr);
  } else {
    print_census(V, r);
  }
  return kExitDone;
}

int cmd_binpack(const f2tile::Region& V, int r, bool sweep) {
  bool anyInfeasible = false;
  auto one = [&](int rr) {
    auto rep = f2tile::non_tiling_by_projection(V, rr);
    const char* verdict = rep.verdict.feasible ? "FEASIBLE" : "INFEASIBLE";
    std::cout << "r=" << rr << " binSize=" << rep.census.binSize
              << " census=" << f2tile::census_to_string(rep.census) << " "
              << verdict;
    if (!rep.verdict.feasible) {
      std::cout << " (" << rep.verdict.obstruction << ")";
      anyInfeasible = true;
    }
    std::cout << "\n";
    std::cout << "#RESULT binpack r=" << rr << " binSize=" << rep.census.binSize
              << " census=\"" << f2tile::census_to_string(rep.census)
              << "\" verdict=" << verdict << "\n";
  };
  if (sweep) {
    for (int rr = 1; rr < V.n(); ++rr) {
      if ((1 << rr) > f2tile::kDefaultBinSizeCap) {
        std::cout << "stopping sweep at r=" << rr
                  << ": bin size exceeds enumeration cap\n";
        break;
      }
      one(rr);
      if (anyInfeasible) break;  // first certifying projection suffices
    }
  } else {
    one(r);
  }
  if (anyInfeasible) {
    std::cout << "region is not a tile (projection criterion)\n";
    return kExitNonTile;
  }
  std::cout << "inconclusive: every tried projection packs\n";
  return kExitInconclusive;
}

int cmd_lp_export(const f2tile::Region& V, const std::string& out,
                  const std::string& format, bool fullRank, bool noButterfly,
                  bool noPassThrough, bool intMarkers) {
  f2tile::LpBuildOptions opts;
  opts.useButterfly = !noButterfly;
  opts.usePassThrough = opts.useButterfly && !noPassThrough;
  opts.fullRank = fullRank;
  auto model = f2tile::build_primal(V, opts);
  auto fmt = format == "mps" ? f2tile::LpFormat::FreeMps : f2tile::LpFormat::LpText;
  std::ofstream os(out);
  if (!os) throw std::runtime_error("cannot write " + out);
  os << f2tile::export_lp(model, fmt, intMarkers);
  auto stats = f2tile::model_stats(model);
  std::cout << "#RESULT lp rows=" << stats.rows << " vars=" << stats.vars
            << " nonzeros=" << stats.nonzeros << "\n";
  return kExitDone;
}

int cmd_verify_cert(const f2tile::Region& V, const std::string& certPath,
                    const std::string& convention) {
  auto cert = f2tile::parse_certificate_file(certPath);
  f2tile::VerifyOptions opts;
  opts.offRow = f2tile::OffRowPolicy::Auto;
  opts.sections = f2tile::SectionMeaning::Auto;
  if (convention == "bit") opts.bits = f2tile::BitConvention::Identity;
  else if (convention == "bitrev") opts.bits = f2tile::BitConvention::Reversed;
  else opts.bits = f2tile::BitConvention::Auto;
  auto verdict = f2tile::verify_certificate(V, cert, opts);
  for (const auto& att : verdict.attempts) {
    std::cout << "tried [" << att.convention << "]: " << att.outcome;
    if (!att.detail.empty()) std::cout << " — " << att.detail;
    std::cout << "\n";
  }
  if (verdict.status == f2tile::Verdict::Valid) {
    std::cout << "certificate VALID under [" << verdict.convention
              << "], b^T z = " << verdict.btz << "\n";
    std::cout << "#RESULT verify-cert verdict=VALID btz=" << verdict.btz << "\n";
    return kExitNonTile;
  }
  const char* s = verdict.status == f2tile::Verdict::Invalid ? "INVALID" : "MALFORMED";
  std::cout << "certificate " << s << " under every tried convention\n";
  std::cout << "#RESULT verify-cert verdict=" << s << "\n";
  return verdict.status == f2tile::Verdict::Invalid ? kExitInconclusive
                                                    : kExitInputError;
}

int cmd_solve_small(const f2tile::Region& V, const std::string& out) {
  auto red = f2tile::reduced_feasibility_system(V);
  auto res = f2tile::solve_phase1(red.sys);
  if (res.feasible) {
    std::cout << "LP feasible (inconclusive: no certificate exists)\n";
    std::cout << "#RESULT solve-small verdict=FEASIBLE pivots=" << res.pivots << "\n";
    return kExitInconclusive;
  }
  auto cert = f2tile::to_dual_certificate(res.dual, red);
  auto text = f2tile::format_certificate(cert);
  f2tile::VerifyOptions vo;
  vo.bits = f2tile::BitConvention::Identity;
  vo.sections = f2tile::SectionMeaning::UpperIsSpectrumSide;
  auto verdict = f2tile::verify_certificate(V, cert, vo);
  if (verdict.status != f2tile::Verdict::Valid)
    throw std::logic_error("internal error: generated certificate failed verification");
  if (!out.empty()) {
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot write " + out);
    os << text;
  } else {
    std::cout << text;
  }
  std::cout << "LP infeasible: region is not a tile; certificate verified, b^T z = "
            << verdict.btz << "\n";
  std::cout << "#RESULT solve-small verdict=INFEASIBLE btz=" << verdict.btz
            << " pivots=" << res.pivots << "\n";
  return kExitNonTile;
}

int cmd_oracle(const f2tile::Region& V, std::uint64_t cap) {
  f2tile::OracleOptions opts;
  opts.nodeCap = cap;
  auto res = f2tile::find_complement(V, opts);
  std::cout << "#RESULT oracle status="
            << (res.found() ? "FOUND" : res.proven_non_tile() ? "EXHAUSTED" : "CAPPED")
            << " nodes=" << res.nodes << "\n";
  if (res.found()) {
    std::cout << "complement found:\n";
    f2tile::write_region(std::cout, *res.complement);
    return kExitDone;
  }
  if (res.proven_non_tile()) {
    std::cout << "search exhausted: region is not a tile\n";
    return kExitNonTile;
  }
  std::cout << "node cap reached: unknown\n";
  return kExitInconclusive;
}

int cmd_report() {
  std::cout << "== putative 64-element tiles ==\n";
  for (const auto& row : f2tile::table1()) {
    auto V = f2tile::table1_region(row.k);
    std::cout << "k=" << row.k << " n=" << row.n << " |V|=" << V.size()
              << " spanDim=" << f2tile::span_dim(V) << "\n";
    std::cout << "#RESULT table1 k=" << row.k << " n=" << row.n
              << " size=" << V.size() << "\n";
  }
  std::cout << "== projection criterion ==\n";
  for (const auto& row : f2tile::table1()) {
    auto V = f2tile::table1_region(row.k);
    bool certified = false;
    for (int r = 1; r < V.n() && !certified && (1 << r) <= f2tile::kDefaultBinSizeCap;
         ++r) {
      auto rep = f2tile::non_tiling_by_projection(V, r);
      if (!rep.verdict.feasible) {
        certified = true;
        std::cout << "k=" << row.k << " r=" << r << " binSize="
                  << rep.census.binSize << " census="
                  << f2tile::census_to_string(rep.census) << " INFEASIBLE\n";
        std::cout << "#RESULT table2 k=" << row.k << " r=" << r
                  << " binSize=" << rep.census.binSize << " census=\""
                  << f2tile::census_to_string(rep.census) << "\"\n";
      }
    }
    if (!certified) {
      std::cout << "k=" << row.k << " no infeasible projection found\n";
      std::cout << "#RESULT table2 k=" << row.k << " verdict=inconclusive\n";
    }
  }
  std::cout << "== published certificates ==\n";
  struct { int k; const char* file; } certs[] = {
      {6, "cert_k6.txt"}, {8, "cert_k8.txt"}};
  for (const auto& c : certs) {
    auto V = f2tile::table1_region(c.k);
    auto cert = f2tile::parse_certificate_file(data_path(c.file));
    f2tile::VerifyOptions vo;
    vo.offRow = f2tile::OffRowPolicy::Auto;
    auto verdict = f2tile::verify_certificate(V, cert, vo);
    if (verdict.status == f2tile::Verdict::Valid) {
      std::cout << "k=" << c.k << " certificate VALID under ["
                << verdict.convention << "], b^T z = " << verdict.btz << "\n";
    } else {
      std::cout << "k=" << c.k << " certificate NOT validated\n";
    }
    std::cout << "#RESULT cert k=" << c.k << " verdict="
              << (verdict.status == f2tile::Verdict::Valid ? "VALID" : "INVALID")
              << "\n";
  }
  return kExitDone;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"non-tileability toolkit for subsets of F_2^n"};
  app.require_subcommand(1);

  std::string regionFile, genFile, certFile, outPath, format = "lp",
              convention = "auto";
  int k = -1, r = 1;
  bool sweep = false, fullRank = false, noButterfly = false,
       noPassThrough = false, intMarkers = false, allRows = false;
  std::uint64_t cap = 0;

  auto add_region_opts = [&](CLI::App* sub) {
    sub->add_option("--region", regionFile, "region file");
    sub->add_option("--k", k, "built-in putative tile by k");
  };

  auto* sIdeal = app.add_subcommand("ideal", "emit an order-ideal region");
  sIdeal->add_option("--k", k, "built-in row");
  sIdeal->add_option("--gen", genFile, "generator file");

  auto* sCensus = app.add_subcommand("census", "piece census of a projection");
  add_region_opts(sCensus);
  sCensus->add_option("--r", r, "keep coordinates r..n-1");
  sCensus->add_flag("--sweep", sweep, "all r = 1..n-1");

  auto* sBinpack = app.add_subcommand("binpack", "projection criterion");
  add_region_opts(sBinpack);
  sBinpack->add_option("--r", r, "keep coordinates r..n-1");
  sBinpack->add_flag("--sweep", sweep, "try r = 1..n-1, stop at first proof");

  auto* sLp = app.add_subcommand("lp-export", "write the feasibility LP");
  add_region_opts(sLp);
  sLp->add_option("--out", outPath, "output path")->required();
  sLp->add_option("--format", format, "lp | mps");
  sLp->add_flag("--full-rank", fullRank, "add c_x <= (|A|-2)^2 rows");
  sLp->add_flag("--no-butterfly", noButterfly, "dense transform rows");
  sLp->add_flag("--no-passthrough", noPassThrough, "keep all butterfly vars");
  sLp->add_flag("--int-markers", intMarkers, "annotate integer columns");

  auto* sVerify = app.add_subcommand("verify-cert", "verify a certificate");
  add_region_opts(sVerify);
  sVerify->add_option("--cert", certFile, "certificate file")->required();
  sVerify->add_option("--convention", convention, "auto | bit | bitrev");

  auto* sSolve = app.add_subcommand("solve-small", "exact LP feasibility");
  add_region_opts(sSolve);
  sSolve->add_option("--out", outPath, "certificate output path");

  auto* sOracle = app.add_subcommand("oracle", "brute-force complement search");
  add_region_opts(sOracle);
  sOracle->add_option("--cap", cap, "node cap (0 = unlimited)");

  auto* sReport = app.add_subcommand("report", "reproduce the published tables");
  sReport->add_flag("--all-rows", allRows, "all ten rows");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sIdeal->parsed()) return cmd_ideal(k, genFile);
    if (sCensus->parsed()) return cmd_census(load_region(regionFile, k), r, sweep);
    if (sBinpack->parsed()) return cmd_binpack(load_region(regionFile, k), r, sweep);
    if (sLp->parsed())
      return cmd_lp_export(load_region(regionFile, k), outPath, format, fullRank,
                           noButterfly, noPassThrough, intMarkers);
    if (sVerify->parsed())
      return cmd_verify_cert(load_region(regionFile, k), certFile, convention);
    if (sSolve->parsed()) return cmd_solve_small(load_region(regionFile, k), outPath);
    if (sOracle->parsed()) return cmd_oracle(load_region(regionFile, k), cap);
    if (sReport->parsed()) return cmd_report();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitDone;
}
