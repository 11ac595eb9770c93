// Command-line front end: construction, verification, decomposition and
// embedding with machine-readable JSON reports on stdout (timing on stderr).
// Exit codes: 0 success, 1 verification failure, 2 invalid input.

#include <chrono>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "heffter/decomp.hpp"
#include "heffter/embed.hpp"
#include "heffter/fill.hpp"
#include "heffter/gha.hpp"
#include "heffter/io.hpp"
#include "heffter/nasm.hpp"

using namespace heffter;

namespace {

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string tok;
  std::istringstream in(s);
  while (std::getline(in, tok, ','))
    if (!tok.empty()) out.push_back(std::stoi(tok));
  return out;
}

struct Report {
  json j;
  std::string inputs;
  int exit_code = 0;

  explicit Report(const std::string& command) { j["command"] = command; }
  void note_input(const std::string& data) { inputs += data; }
  void finish() {
    j["inputs_digest"] = digest(inputs);
    json out;
    out["command"] = j["command"];
    out["inputs_digest"] = j["inputs_digest"];
    for (auto& [key, val] : j.items())
      if (key != "command" && key != "inputs_digest") out[key] = val;
    std::cout << out.dump(2) << "\n";
  }
};

SignMatrix load_sign_matrix(const std::string& path, Report& rep) {
  std::string data = read_file(path);
  rep.note_input(data);
  if (!data.empty() && data.front() == '{') return sign_matrix_from_json(json::parse(data));
  return sign_matrix_from_text(data);
}

GHACandidate load_gha(const std::string& path, Report& rep) {
  std::string data = read_file(path);
  rep.note_input(data);
  return gha_from_json(json::parse(data));
}

void emit(Report& rep, const char* key, const json& payload, const std::string& out_path) {
  if (out_path.empty()) {
    rep.j["outputs"][key] = payload;
  } else {
    write_file(out_path, payload.is_string() ? payload.get<std::string>() : payload.dump(2) + "\n");
    rep.j["outputs"][key] = out_path;
  }
}

// Shared NASM source flags for the gha build subcommands.
struct NasmSource {
  std::string file;
  std::vector<int> uniform;  // m,n,h,k
  std::string doubled;       // "h1,h2;k1,k2"

  void attach(CLI::App* cmd) {
    cmd->add_option("--nasm", file, "sign matrix file (text or JSON)");
    cmd->add_option("--nasm-uniform", uniform, "build a uniform NASM: m n h k")->expected(4);
    cmd->add_option("--nasm-doubled", doubled,
                    "build a doubled NASM from base weights 'h1,h2,...;k1,k2,...'");
  }

  SignMatrix resolve(Report& rep) const {
    if (!file.empty()) return load_sign_matrix(file, rep);
    if (!uniform.empty()) return build_uniform_nasm(uniform[0], uniform[1], uniform[2], uniform[3]);
    if (!doubled.empty()) {
      auto semi = doubled.find(';');
      if (semi == std::string::npos)
        throw std::invalid_argument("--nasm-doubled expects 'h...;k...'");
      return build_doubled_nasm(parse_int_list(doubled.substr(0, semi)),
                                parse_int_list(doubled.substr(semi + 1)));
    }
    throw std::invalid_argument("one of --nasm, --nasm-uniform, --nasm-doubled is required");
  }
};

json gha_output(const GHACandidate& c) { return to_json(c); }

json run_gha_checks(const GHACandidate& c, Report& rep) {
  auto r = verify_gha(c);
  json out = to_json(r);
  if (!r.ok) rep.exit_code = 1;
  return out;
}

// ---------------------------------------------------------------------------
// pipeline: build -> verify -> decompose -> embed from one JSON job file.
// ---------------------------------------------------------------------------

GHACandidate build_from_job(const json& build, Report& rep) {
  std::string op = build.at("op").get<std::string>();
  auto nasm_of = [&](const json& spec) -> SignMatrix {
    if (spec.contains("uniform")) {
      auto u = spec.at("uniform").get<std::vector<int>>();
      return build_uniform_nasm(u.at(0), u.at(1), u.at(2), u.at(3));
    }
    if (spec.contains("doubled"))
      return build_doubled_nasm(spec.at("doubled").at("rows").get<std::vector<int>>(),
                                spec.at("doubled").at("cols").get<std::vector<int>>());
    if (spec.contains("file")) return load_sign_matrix(spec.at("file").get<std::string>(), rep);
    return sign_matrix_from_json(spec);
  };
  if (op == "nonzero")
    return build_nonzero_simple_ngha(build.at("v").get<int>(),
                                     build.at("symbols").get<std::vector<int>>(),
                                     nasm_of(build.at("nasm")));
  if (op == "zero") {
    PairedSymbolSet p(build.at("symbols").get<std::vector<int>>(), build.at("x").get<int>(),
                      build.at("v").get<int>(), build.at("row_parts").get<std::vector<int>>());
    return build_zero_simple_gha(p, nasm_of(build.at("nasm")));
  }
  if (op == "relative")
    return build_relative_zero_gha(build.at("d").get<int>(), build.at("u").get<int>(),
                                   build.at("row_parts").get<std::vector<int>>(),
                                   build.at("col_parts").get<std::vector<int>>(),
                                   build.value("uniform", true));
  if (op == "fill") {
    std::string pattern_text = build.contains("pattern_file")
                                   ? read_file(build.at("pattern_file").get<std::string>())
                                   : build.at("pattern").get<std::string>();
    rep.note_input(pattern_text);
    Group g = Group::parse(build.at("group").get<std::string>());
    SymbolSet s(g, build.at("symbols").get<std::vector<int>>(), build.value("lambda", 1));
    return fill_gha(bin_matrix_from_text(pattern_text), g, s);
  }
  throw std::invalid_argument("unknown build op: " + op);
}

int run_pipeline(const std::string& job_path, const std::string& out_path) {
  Report rep("pipeline --job " + job_path + (out_path.empty() ? "" : " --out " + out_path));
  std::string job_text = read_file(job_path);
  rep.note_input(job_text);
  json job = json::parse(job_text);

  GHACandidate c = build_from_job(job.at("build"), rep);
  rep.j["outputs"]["gha"] = gha_output(c);
  auto gha_rep = verify_gha(c);
  rep.j["checks"]["GHA:nec"] = gha_rep.nec_ok;
  rep.j["checks"]["GHA:nec2"] = gha_rep.gale_ryser_ok;
  rep.j["checks"]["GHA:weights"] = gha_rep.weights_ok;
  rep.j["checks"]["GHA:multiset"] = gha_rep.multiset_ok;
  if (!gha_rep.ok) rep.exit_code = 1;
  if (gha_rep.sums) {
    rep.j["checks"]["zero_sum"] = gha_rep.sums->verdict == SumVerdict::zero_sum;
    rep.j["checks"]["nonzero_sum"] = gha_rep.sums->verdict == SumVerdict::nonzero_sum;
    rep.j["checks"]["simple"] = gha_rep.all_simple;
  }

  if (job.value("decompose", json(nullptr)).is_object()) {
    const json& dj = job["decompose"];
    bool undirected = dj.value("undirected", true);
    Sign sign = dj.value("sign", "+") == std::string("+") ? Sign::plus : Sign::minus;
    const Ordering& ord = *c.ordering;
    auto rows = decomposition_from_matrix(c.matrix, ord, sign, Side::rows, undirected);
    auto cols = decomposition_from_matrix(c.matrix, ord, sign, Side::cols, undirected);
    rep.j["outputs"]["decomposition_rows"] = to_json(rows, Side::rows, sign);
    rep.j["outputs"]["decomposition_cols"] = to_json(cols, Side::cols, sign);
    std::vector<elem> conn;
    for (elem e : c.matrix.cells)
      if (e != 0) conn.push_back(undirected ? c.matrix.group.abs(e)
                                            : (sign == Sign::plus ? c.matrix.group.neg(e) : e));
    CayleySpec spec(c.matrix.group, conn, !undirected);
    bool dec_rows = (bool)check_decomposes(rows, spec);
    bool dec_cols = (bool)check_decomposes(cols, spec);
    rep.j["checks"]["decomposes"] = dec_rows && dec_cols;
    if (!(dec_rows && dec_cols)) rep.exit_code = 1;
    if (c.symbols.lambda == 1) {
      bool orth = check_orthogonal(rows, cols);
      rep.j["checks"]["orthogonality"] = orth;
      if (!orth) rep.exit_code = 1;
    } else {
      rep.j["skipped"].push_back("orthogonality (lambda > 1)");
    }
  }

  if (job.value("embed", json(nullptr)).is_object()) {
    const json& ej = job["embed"];
    long long budget = ej.value("budget", 1000000LL);
    rep.j["checks"]["biembedding_attempted"] = true;
    try {
      auto search = find_compatible_ordering(c.matrix, budget);
      rep.j["checks"]["compatible_ordering_found"] = search.status == SearchStatus::found;
      if (search.status == SearchStatus::found) {
        auto rs = rotation_system(c, *search.ordering);
        auto emb = trace_embedding(rs);
        rep.j["outputs"]["embedding"] = to_json(emb);
        rep.j["checks"]["biembedding"] = emb.ok();
        if (!emb.ok()) rep.exit_code = 1;
      }
    } catch (const std::invalid_argument& e) {
      rep.j["checks"]["compatible_ordering_found"] = false;
      rep.j["notes"].push_back(std::string("embedding skipped: ") + e.what());
    }
  }

  if (!out_path.empty()) write_file(out_path, rep.j.dump(2) + "\n");
  rep.finish();
  return rep.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized Heffter array construction and verification"};
  app.require_subcommand(1);
  std::ostringstream cmdline;
  for (int i = 1; i < argc; ++i) cmdline << (i > 1 ? " " : "") << argv[i];

  auto t0 = std::chrono::steady_clock::now();
  int code = 0;
  try {
    // group ------------------------------------------------------------
    auto* group_cmd = app.add_subcommand("group", "finite group inspection");
    auto* ginfo = group_cmd->add_subcommand("info", "order, commutativity, involutions");
    std::string gdesc;
    ginfo->add_option("desc", gdesc, "group descriptor")->required();

    // binmat -----------------------------------------------------------
    auto* binmat_cmd = app.add_subcommand("binmat", "0/1 matrices with given weights");
    std::string bm_rows, bm_cols, bm_out;
    auto* bm_check = binmat_cmd->add_subcommand("check", "degree-sequence feasibility");
    bm_check->add_option("--rows", bm_rows)->required();
    bm_check->add_option("--cols", bm_cols)->required();
    auto* bm_build = binmat_cmd->add_subcommand("build", "greedy realization");
    bm_build->add_option("--rows", bm_rows)->required();
    bm_build->add_option("--cols", bm_cols)->required();
    bm_build->add_option("--out", bm_out);

    // nasm ---------------------------------------------------------------
    auto* nasm_cmd = app.add_subcommand("nasm", "near alternating sign matrices");
    int nm = 0, nn = 0, nh = 0, nk = 0;
    std::string nasm_out, nasm_in, nd_rows, nd_cols;
    auto* nasm_build = nasm_cmd->add_subcommand("build", "uniform NASM(m,n;h,k)");
    nasm_build->add_option("-m", nm)->required();
    nasm_build->add_option("-n", nn)->required();
    nasm_build->add_option("-H", nh)->required();
    nasm_build->add_option("-K", nk)->required();
    nasm_build->add_option("--out", nasm_out);
    auto* nasm_doubled = nasm_cmd->add_subcommand("build-doubled", "NASM with doubled even weights");
    nasm_doubled->add_option("--rows", nd_rows)->required();
    nasm_doubled->add_option("--cols", nd_cols)->required();
    nasm_doubled->add_option("--out", nasm_out);
    auto* nasm_verify = nasm_cmd->add_subcommand("verify", "alternation check");
    nasm_verify->add_option("--in", nasm_in)->required();

    // gha ----------------------------------------------------------------
    auto* gha_cmd = app.add_subcommand("gha", "generalized Heffter arrays");
    int gv = 0, gx = 0, gd = 0, gu = 0, glambda = 1;
    std::string gsymbols, grow_parts, gcol_parts, gout, gin, gordering, gpattern, ggroup;
    bool guniform = false, gdoubled = false;
    NasmSource gnasm, znasm;

    auto* gha_nonzero = gha_cmd->add_subcommand("build-nonzero", "nonzero-sum simple NGHA over Z_v");
    gha_nonzero->add_option("-v", gv)->required();
    gha_nonzero->add_option("--symbols", gsymbols)->required();
    gnasm.attach(gha_nonzero);
    gha_nonzero->add_option("--out", gout);

    auto* gha_zero = gha_cmd->add_subcommand("build-zero", "zero-sum simple GHA over Z_v");
    gha_zero->add_option("-v", gv)->required();
    gha_zero->add_option("-x", gx)->required();
    gha_zero->add_option("--symbols", gsymbols)->required();
    gha_zero->add_option("--row-parts", grow_parts)->required();
    znasm.attach(gha_zero);
    gha_zero->add_option("--out", gout);

    auto* gha_rel = gha_cmd->add_subcommand("build-relative", "zero-sum GHA over (Z_v \\ U)+");
    gha_rel->add_option("-d", gd)->required();
    gha_rel->add_option("-u", gu)->required();
    gha_rel->add_option("--row-parts", grow_parts)->required();
    gha_rel->add_option("--col-parts", gcol_parts)->required();
    gha_rel->add_flag("--uniform", guniform);
    gha_rel->add_flag("--doubled", gdoubled);
    gha_rel->add_option("--out", gout);

    auto* gha_verify = gha_cmd->add_subcommand("verify", "check the GHA conditions");
    gha_verify->add_option("--in", gin)->required();
    gha_verify->add_option("--ordering", gordering);

    auto* gha_fill = gha_cmd->add_subcommand("fill", "fill a 0/1 pattern over any group");
    gha_fill->add_option("--pattern", gpattern)->required();
    gha_fill->add_option("--group", ggroup)->required();
    gha_fill->add_option("--symbols", gsymbols)->required();
    gha_fill->add_option("--lambda", glambda);
    gha_fill->add_option("--out", gout);

    // decomp ---------------------------------------------------------------
    auto* dec_cmd = app.add_subcommand("decomp", "walk decompositions of Cayley graphs");
    std::string dgha, dside = "rows", dsign = "+", dout, ddec_a, ddec_b, dconn;
    int dline = 1;
    bool ddirected = false;
    auto* dec_build = dec_cmd->add_subcommand("build", "developments from an ordered array");
    dec_build->add_option("--gha", dgha)->required();
    dec_build->add_option("--side", dside)->check(CLI::IsMember({"rows", "cols"}));
    dec_build->add_option("--sign", dsign)->check(CLI::IsMember({"+", "-"}));
    dec_build->add_flag("--directed", ddirected);
    dec_build->add_option("--out", dout);
    auto* dec_verify = dec_cmd->add_subcommand("verify", "edge-exact decomposition check");
    dec_verify->add_option("--in", ddec_a)->required();
    dec_verify->add_option("--connection", dconn)->required();
    auto* dec_orth = dec_cmd->add_subcommand("orthogonal", "pairwise shared edges <= 1");
    dec_orth->add_option("--a", ddec_a)->required();
    dec_orth->add_option("--b", ddec_b)->required();
    auto* dec_circ = dec_cmd->add_subcommand("circuits", "circuits joining walk translates");
    dec_circ->add_option("--gha", dgha)->required();
    dec_circ->add_option("--side", dside)->check(CLI::IsMember({"rows", "cols"}));
    dec_circ->add_option("--line", dline);
    dec_circ->add_option("--sign", dsign)->check(CLI::IsMember({"+", "-"}));
    dec_circ->add_option("--out", dout);
    auto* dec_period = dec_cmd->add_subcommand("period", "orders of the ordered line sums");
    dec_period->add_option("--gha", dgha)->required();

    // embed ------------------------------------------------------------------
    auto* emb_cmd = app.add_subcommand("embed", "face-2-colorable embeddings");
    std::string egha, eordering, eout;
    long long ebudget = 1000000;
    auto* emb_build = emb_cmd->add_subcommand("build", "search an ordering and trace faces");
    emb_build->add_option("--gha", egha)->required();
    emb_build->add_option("--ordering", eordering);
    emb_build->add_option("--budget", ebudget);
    emb_build->add_option("--out", eout);
    auto* emb_verify = emb_cmd->add_subcommand("verify", "trace faces for a given ordering");
    emb_verify->add_option("--gha", egha)->required();
    emb_verify->add_option("--ordering", eordering)->required();

    // pipeline ------------------------------------------------------------
    auto* pipe_cmd = app.add_subcommand("pipeline", "build, verify, decompose, embed");
    std::string pjob, pout;
    pipe_cmd->add_option("--job", pjob)->required();
    pipe_cmd->add_option("--out", pout);

    app.parse(argc, argv);

    if (ginfo->parsed()) {
      Report rep(cmdline.str());
      rep.note_input(gdesc);
      Group g = Group::parse(gdesc);
      json inv = json::array();
      for (elem a : involutions(g, [&] {
             std::vector<elem> all;
             for (elem x = 0; x < g.order(); ++x) all.push_back(x);
             return all;
           }()))
        inv.push_back(a);
      rep.j["outputs"]["group"] =
          json{{"descriptor", g.descriptor()}, {"order", g.order()}, {"abelian", g.abelian()},
               {"involutions", inv}};
      rep.finish();
      code = rep.exit_code;
    } else if (bm_check->parsed()) {
      Report rep(cmdline.str());
      rep.note_input(bm_rows + "|" + bm_cols);
      auto res = gale_ryser_check(parse_int_list(bm_rows), parse_int_list(bm_cols));
      rep.j["checks"]["feasible"] = res.ok;
      if (!res.ok) rep.j["reason"] = res.reason;
      rep.finish();
      code = res.ok ? 0 : 1;
    } else if (bm_build->parsed()) {
      Report rep(cmdline.str());
      rep.note_input(bm_rows + "|" + bm_cols);
      auto b = gale_ryser_construct(parse_int_list(bm_rows), parse_int_list(bm_cols));
      emit(rep, "matrix", to_text(b), bm_out);
      rep.finish();
      code = rep.exit_code;
    } else if (nasm_build->parsed()) {
      Report rep(cmdline.str());
      auto s = build_uniform_nasm(nm, nn, nh, nk);
      emit(rep, "matrix", to_json(s), nasm_out);
      rep.j["checks"]["NASM:alternation"] = (bool)verify_nasm(s);
      rep.finish();
      code = rep.exit_code;
    } else if (nasm_doubled->parsed()) {
      Report rep(cmdline.str());
      auto s = build_doubled_nasm(parse_int_list(nd_rows), parse_int_list(nd_cols));
      emit(rep, "matrix", to_json(s), nasm_out);
      rep.j["checks"]["NASM:alternation"] = (bool)verify_nasm(s);
      rep.finish();
      code = rep.exit_code;
    } else if (nasm_verify->parsed()) {
      Report rep(cmdline.str());
      auto s = load_sign_matrix(nasm_in, rep);
      auto r = verify_nasm(s);
      rep.j["checks"]["NASM:alternation"] = r.ok;
      rep.j["outputs"]["row_weights"] = r.row_weights;
      rep.j["outputs"]["col_weights"] = r.col_weights;
      if (!r.ok) rep.j["reason"] = r.reason;
      rep.finish();
      code = r.ok ? 0 : 1;
    } else if (gha_nonzero->parsed()) {
      Report rep(cmdline.str());
      auto c = build_nonzero_simple_ngha(gv, parse_int_list(gsymbols), gnasm.resolve(rep));
      emit(rep, "gha", gha_output(c), gout);
      rep.j["report"] = run_gha_checks(c, rep);
      rep.finish();
      code = rep.exit_code;
    } else if (gha_zero->parsed()) {
      Report rep(cmdline.str());
      PairedSymbolSet p(parse_int_list(gsymbols), gx, gv, parse_int_list(grow_parts));
      auto c = build_zero_simple_gha(p, znasm.resolve(rep));
      emit(rep, "gha", gha_output(c), gout);
      rep.j["report"] = run_gha_checks(c, rep);
      rep.finish();
      code = rep.exit_code;
    } else if (gha_rel->parsed()) {
      Report rep(cmdline.str());
      auto c = build_relative_zero_gha(gd, gu, parse_int_list(grow_parts), parse_int_list(gcol_parts),
                                       !gdoubled);
      emit(rep, "gha", gha_output(c), gout);
      rep.j["report"] = run_gha_checks(c, rep);
      rep.finish();
      code = rep.exit_code;
    } else if (gha_verify->parsed()) {
      Report rep(cmdline.str());
      auto c = load_gha(gin, rep);
      if (!gordering.empty()) {
        std::string data = read_file(gordering);
        rep.note_input(data);
        c.ordering = ordering_from_json(json::parse(data));
      }
      rep.j["report"] = run_gha_checks(c, rep);
      rep.finish();
      code = rep.exit_code;
    } else if (gha_fill->parsed()) {
      Report rep(cmdline.str());
      std::string pattern_text = read_file(gpattern);
      rep.note_input(pattern_text);
      Group g = Group::parse(ggroup);
      auto c = fill_gha(bin_matrix_from_text(pattern_text), g,
                        SymbolSet(g, parse_int_list(gsymbols), glambda));
      emit(rep, "gha", gha_output(c), gout);
      rep.j["report"] = run_gha_checks(c, rep);
      rep.finish();
      code = rep.exit_code;
    } else if (dec_build->parsed()) {
      Report rep(cmdline.str());
      auto c = load_gha(dgha, rep);
      if (!c.ordering) c.ordering = default_natural_ordering(c.matrix);
      Side side = dside == "rows" ? Side::rows : Side::cols;
      Sign sign = dsign == "+" ? Sign::plus : Sign::minus;
      auto devs = decomposition_from_matrix(c.matrix, *c.ordering, sign, side, !ddirected);
      emit(rep, "decomposition", to_json(devs, side, sign), dout);
      rep.finish();
      code = rep.exit_code;
    } else if (dec_verify->parsed()) {
      Report rep(cmdline.str());
      std::string data = read_file(ddec_a);
      rep.note_input(data);
      auto devs = developments_from_json(json::parse(data));
      bool directed = devs.empty() ? true : devs.front().base.directed;
      CayleySpec spec(devs.front().group, parse_int_list(dconn), directed);
      auto res = check_decomposes(devs, spec);
      rep.j["checks"]["decomposes"] = res.ok;
      if (!res.ok) rep.j["reason"] = res.reason;
      rep.finish();
      code = res.ok ? 0 : 1;
    } else if (dec_orth->parsed()) {
      Report rep(cmdline.str());
      std::string da = read_file(ddec_a), db = read_file(ddec_b);
      rep.note_input(da + db);
      bool orth = check_orthogonal(developments_from_json(json::parse(da)),
                                   developments_from_json(json::parse(db)));
      rep.j["checks"]["orthogonality"] = orth;
      rep.finish();
      code = orth ? 0 : 1;
    } else if (dec_circ->parsed()) {
      Report rep(cmdline.str());
      auto c = load_gha(dgha, rep);
      if (!c.ordering) c.ordering = default_natural_ordering(c.matrix);
      Side side = dside == "rows" ? Side::rows : Side::cols;
      Sign sign = dsign == "+" ? Sign::plus : Sign::minus;
      json circuits = json::array();
      for (const auto& circ : circuits_from_line(c.matrix, *c.ordering, side, dline - 1, sign))
        circuits.push_back(json{{"verts", circ.verts},
                                {"join", circ.join_elem},
                                {"period", circ.period}});
      emit(rep, "circuits", circuits, dout);
      rep.finish();
      code = rep.exit_code;
    } else if (dec_period->parsed()) {
      Report rep(cmdline.str());
      auto c = load_gha(dgha, rep);
      if (!c.ordering) c.ordering = default_natural_ordering(c.matrix);
      rep.j["outputs"]["period"] = period_sequence(c.matrix, *c.ordering);
      rep.finish();
      code = rep.exit_code;
    } else if (emb_build->parsed() || emb_verify->parsed()) {
      Report rep(cmdline.str());
      auto c = load_gha(egha, rep);
      Ordering ord;
      if (!eordering.empty()) {
        std::string data = read_file(eordering);
        rep.note_input(data);
        ord = ordering_from_json(json::parse(data));
      } else {
        auto search = find_compatible_ordering(c.matrix, ebudget);
        rep.j["checks"]["compatible_ordering_found"] = search.status == SearchStatus::found;
        if (search.status != SearchStatus::found) {
          rep.j["reason"] = search.status == SearchStatus::exhausted ? "search space exhausted"
                                                                     : "search budget exhausted";
          rep.finish();
          std::cerr << "elapsed_ms "
                    << std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count()
                    << "\n";
          return 1;
        }
        ord = *search.ordering;
        rep.j["outputs"]["ordering"] = to_json(ord);
      }
      auto rs = rotation_system(c, ord);
      auto emb = trace_embedding(rs);
      emit(rep, "embedding", to_json(emb), eout);
      rep.j["checks"]["two_colorable"] = emb.two_colorable;
      rep.j["checks"]["families_match"] = emb.families_match;
      rep.j["checks"]["euler"] = emb.euler_ok;
      rep.finish();
      code = emb.ok() ? 0 : 1;
    } else if (pipe_cmd->parsed()) {
      code = run_pipeline(pjob, pout);
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  auto t1 = std::chrono::steady_clock::now();
  std::cerr << "elapsed_ms " << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
            << "\n";
  return code;
}
