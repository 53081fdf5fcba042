#include "liaison/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "liaison/duality.hpp"
#include "liaison/errors.hpp"
#include "liaison/linkage.hpp"
#include "liaison/oracle.hpp"

namespace liaison {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* status_label(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::PreconditionFailed:
      return "precondition_failed";
    case CheckStatus::Inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

ordered_json hf_json(const HilbertSeries& h, const Window& w) {
  ordered_json arr = ordered_json::array();
  for (const auto& [d, v] : tabulate(h, w.lo, w.hi))
    arr.push_back(ordered_json::array({d, v}));
  return arr;
}

// A check plus optional structured payload (Hilbert data, Betti grid).
struct JCheck {
  CheckReport r;
  ordered_json extra = nullptr;
};

struct Collector {
  std::vector<JCheck> checks;

  void add(CheckReport r) { checks.push_back({std::move(r), nullptr}); }
  void add(CheckReport r, ordered_json extra) {
    checks.push_back({std::move(r), std::move(extra)});
  }
  void add_all(std::vector<CheckReport> v) {
    for (auto& r : v) add(std::move(r));
  }
  void add_info(std::string id, std::string note,
                ordered_json extra = nullptr) {
    CheckReport r;
    r.check_id = std::move(id);
    r.status = CheckStatus::Pass;
    r.note = std::move(note);
    checks.push_back({std::move(r), std::move(extra)});
  }
};

std::string hash_string(std::uint64_t h) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

Window capped(const Window& w, int max_degree) {
  Window c{std::max(w.lo, -max_degree), std::min(w.hi, max_degree)};
  if (c.lo > c.hi) c = {0, 0};
  return c;
}

const SessionIdeal& need_ideal(const SessionFile& s, const std::string& name) {
  const SessionIdeal* si = s.find_ideal(name);
  if (!si) fail(ErrorCode::BadArgument, "unknown ideal `" + name + "`");
  return *si;
}

// Link-taking commands accept a declared link name or `<ideal> via <ideal>`.
LinkedPair pair_from_args(const SessionFile& s,
                          const std::vector<std::string>& rest) {
  if (rest.size() == 1) {
    const SessionLink* sl = s.find_link(rest[0]);
    if (!sl) fail(ErrorCode::BadArgument, "unknown link `" + rest[0] + "`");
    return make_link(s.ring, need_ideal(s, sl->ideal_name).ideal.gens,
                     need_ideal(s, sl->gorenstein_name).ideal.gens);
  }
  if (rest.size() == 3 && rest[1] == "via")
    return make_link(s.ring, need_ideal(s, rest[0]).ideal.gens,
                     need_ideal(s, rest[2]).ideal.gens);
  fail(ErrorCode::BadArgument,
       "expected a link name or `<ideal> via <ideal>`");
}

std::string module_note(const ResolvedModule& M) {
  if (M.is_zero()) return "zero";
  const HomologicalInvariants inv = M.invariants();
  std::ostringstream os;
  os << "dim=" << inv.dim << " depth=" << inv.depth
     << " degree=" << inv.degree
     << " cohen_macaulay=" << (inv.cohen_macaulay ? 1 : 0);
  return os.str();
}

// Cross-check the quotient Hilbert function of a named generating set
// against the dense oracle over the capped window.
void oracle_quotient_check(Collector& col, const RingPtr& ring,
                           const std::string& label,
                           const std::vector<Polynomial>& gens,
                           const HilbertSeries& series, const Window& w) {
  CheckReport r;
  r.check_id = "oracle.hilbert." + label;
  r.status = CheckStatus::Pass;
  r.note = "dense row reduction agrees with the engine on the window";
  for (int mu = std::max(0, w.lo); mu <= w.hi; ++mu) {
    long long expect = series.value_at(mu);
    long long got = 0;
    try {
      got = oracle_ideal_hf(ring, gens, mu);
    } catch (const LiaisonError& e) {
      if (e.code() != ErrorCode::CostLimit) throw;
      r.status = CheckStatus::Inconclusive;
      r.witness_degree = mu;
      r.note = std::string("oracle cost guard reached: ") + e.what();
      break;
    }
    if (got != expect) {
      r.status = CheckStatus::Fail;
      r.witness_degree = mu;
      r.lhs = expect;
      r.rhs = got;
      r.note = "engine and oracle disagree";
      break;
    }
  }
  col.add(std::move(r));
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

void cmd_resolve(Collector& col, const SessionFile& s,
                 const std::vector<std::string>& rest,
                 const CommandOptions& opts) {
  if (rest.size() != 1)
    fail(ErrorCode::BadArgument, "usage: resolve <ideal>");
  const SessionIdeal& si = need_ideal(s, rest[0]);
  const ResolvedModule M = resolve_quotient(s.ring, si.ideal.gens);
  if (M.is_zero()) {
    col.add_info("resolve.module", "the quotient is the zero module");
    return;
  }
  const HomologicalInvariants inv = M.invariants();
  {
    std::ostringstream os;
    os << "dim=" << inv.dim << " depth=" << inv.depth << " pd=" << inv.pd
       << " regularity=" << inv.regularity << " degree=" << inv.degree
       << " codim=" << inv.codim
       << " cohen_macaulay=" << (inv.cohen_macaulay ? 1 : 0)
       << " gorenstein=" << (inv.gorenstein ? 1 : 0);
    col.add_info("resolve.invariants", os.str());
  }
  {
    const auto b = M.res.betti();
    ordered_json grid = ordered_json::object();
    std::string totals;
    for (const auto& [i, row] : b) {
      long long total = 0;
      ordered_json rj = ordered_json::array();
      for (const auto& [j, c] : row) {
        rj.push_back(ordered_json::array({j, c}));
        total += c;
      }
      grid[std::to_string(i)] = rj;
      if (!totals.empty()) totals += ";";
      totals += std::to_string(total);
    }
    col.add_info("resolve.betti", "total ranks " + totals,
                 ordered_json{{"betti", grid}});
  }
  col.add_info("resolve.hilbert", "quotient Hilbert function",
               ordered_json{{"hilbert", hf_json(M.series(), opts.window)}});
  if (opts.oracle)
    oracle_quotient_check(col, s.ring, rest[0], si.ideal.gens, M.series(),
                          capped(opts.window, opts.max_degree));
}

void cmd_deficiency(Collector& col, const SessionFile& s,
                    const std::vector<std::string>& rest,
                    const CommandOptions& opts) {
  if (rest.empty() || rest.size() > 2)
    fail(ErrorCode::BadArgument, "usage: deficiency <ideal> [<i>]");
  const SessionIdeal& si = need_ideal(s, rest[0]);
  const ResolvedModule M = resolve_quotient(s.ring, si.ideal.gens);
  if (M.is_zero()) {
    col.add_info("deficiency.module", "the quotient is the zero module");
    return;
  }
  const int d = M.dim();
  int only = -1;
  if (rest.size() == 2) {
    try {
      size_t used = 0;
      only = std::stoi(rest[1], &used);
      if (used != rest[1].size()) throw std::invalid_argument(rest[1]);
    } catch (const std::exception&) {
      fail(ErrorCode::BadArgument,
           "cohomological index must be an integer, got `" + rest[1] + "`");
    }
    if (only < 0 || only > d)
      fail(ErrorCode::BadArgument,
           "cohomological index " + std::to_string(only) +
               " outside [0, " + std::to_string(d) + "]");
  }
  const int n = s.ring->nvars;
  for (int i = (only >= 0 ? only : 0); i <= (only >= 0 ? only : d); ++i) {
    const ResolvedModule Di = deficiency_module(M, i);
    col.add_info("deficiency.d" + std::to_string(i), module_note(Di),
                 ordered_json{{"hilbert", hf_json(Di.series(), opts.window)}});
    if (opts.oracle) {
      const Window cw = capped(opts.window, opts.max_degree);
      CheckReport r;
      r.check_id = "oracle.ext." + std::to_string(i);
      r.status = CheckStatus::Pass;
      r.note = "dual-complex slice homology agrees on the window";
      for (int mu = cw.lo; mu <= cw.hi; ++mu) {
        long long expect = Di.series().value_at(mu);
        long long got = 0;
        try {
          got = oracle_ext_hf(M.res, n - i, mu);
        } catch (const LiaisonError& e) {
          if (e.code() != ErrorCode::CostLimit) throw;
          r.status = CheckStatus::Inconclusive;
          r.witness_degree = mu;
          r.note = std::string("oracle cost guard reached: ") + e.what();
          break;
        }
        if (got != expect) {
          r.status = CheckStatus::Fail;
          r.witness_degree = mu;
          r.lhs = expect;
          r.rhs = got;
          r.note = "engine and oracle disagree";
          break;
        }
      }
      col.add(std::move(r));
    }
  }
}

void cmd_diagram(Collector& col, const SessionFile& s,
                 const std::vector<std::string>& rest,
                 const CommandOptions& opts) {
  if (rest.size() != 1)
    fail(ErrorCode::BadArgument, "usage: diagram <ideal>");
  const SessionIdeal& si = need_ideal(s, rest[0]);
  const ResolvedModule M = resolve_quotient(s.ring, si.ideal.gens);
  const DeficiencyDiagram dg = deficiency_diagram(M);
  {
    std::ostringstream os;
    os << "dim=" << dg.dim << " depth=" << dg.depth
       << " depth_class=" << dg.depth_class << " cm_codim=" << dg.cm_codim
       << " s_module=" << dg.s_module;
    col.add_info("diagram.summary", os.str());
  }
  {
    CheckReport r;
    r.check_id = "diagram.sheaf_s2";
    r.status = CheckStatus::Pass;
    r.lhs = dg.sheaf_s(2) ? 1 : 0;
    if (auto wit = dg.sheaf_s_witness(2)) {
      r.note = "first violating entry D_" + std::to_string(wit->second) +
               "(D_" + std::to_string(wit->first) + ")";
    } else {
      r.note = "sheaf-level Serre condition S_2 holds";
    }
    col.add(std::move(r));
  }
  for (int j = 0; j <= dg.dim; ++j) {
    col.add_info(
        "diagram.deficiency." + std::to_string(j),
        module_note(dg.deficiency[j]),
        ordered_json{
            {"hilbert", hf_json(dg.deficiency[j].series(), opts.window)}});
  }
  for (int j = 0; j < dg.dim; ++j)
    for (int i = 0; i <= j; ++i)
      col.add_info(
          "diagram.entry." + std::to_string(j) + "." + std::to_string(i),
          module_note(dg.entry[j][i]),
          ordered_json{
              {"hilbert", hf_json(dg.entry[j][i].series(), opts.window)}});
  if (opts.oracle)
    oracle_quotient_check(col, s.ring, rest[0], si.ideal.gens, M.series(),
                          capped(opts.window, opts.max_degree));
}

void oracle_pair_checks(Collector& col, const SessionFile& s,
                        const LinkedPair& pair, const CommandOptions& opts) {
  const Window cw = capped(opts.window, opts.max_degree);
  oracle_quotient_check(col, s.ring, "first", pair.I.gens, pair.R.series(),
                        cw);
  oracle_quotient_check(col, s.ring, "residual", pair.J.gens, pair.S.series(),
                        cw);
  oracle_quotient_check(col, s.ring, "gorenstein", pair.link.b.gens,
                        pair.link.B.series(), cw);
}

void cmd_link(Collector& col, const SessionFile& s,
              const std::vector<std::string>& rest,
              const CommandOptions& opts) {
  const LinkedPair pair = pair_from_args(s, rest);
  col.add_all(check_link_basics(pair, opts.window));
  col.add_all(check_liaison_sequence(pair, opts.window));
  col.add_all(check_liaison_lambda(pair, opts.window));
  if (opts.oracle) oracle_pair_checks(col, s, pair, opts);
}

CheckReport renamed(CheckReport r, std::string id) {
  r.check_id = std::move(id);
  return r;
}

void cmd_check_surface(Collector& col, const SessionFile& s,
                       const std::vector<std::string>& rest,
                       const CommandOptions& opts) {
  const LinkedPair pair = pair_from_args(s, rest);
  for (CheckReport& r : surface_suite(pair.R, opts.window).checks) {
    std::string id = r.check_id + ".first";
    col.add(renamed(std::move(r), std::move(id)));
  }
  for (CheckReport& r : surface_suite(pair.S, opts.window).checks) {
    std::string id = r.check_id + ".residual";
    col.add(renamed(std::move(r), std::move(id)));
  }
  col.add_all(check_surface_liaison(pair, opts.window));
  if (opts.certify) {
    const Window cw = capped(opts.window, opts.max_degree);
    const int a = pair.link.a;
    col.add(renamed(certify_graded_iso(deficiency_module(pair.S, 1),
                                       iterated_deficiency(pair.R, {0, 2}), a,
                                       cw),
                    "certify.rao"));
    col.add(renamed(certify_graded_iso(iterated_deficiency(pair.S, {1, 2}),
                                       iterated_deficiency(pair.R, {1, 1, 2}),
                                       -a, cw),
                    "certify.curve"));
  }
  if (opts.oracle) oracle_pair_checks(col, s, pair, opts);
}

void cmd_check_threefold(Collector& col, const SessionFile& s,
                         const std::vector<std::string>& rest,
                         const CommandOptions& opts) {
  const LinkedPair pair = pair_from_args(s, rest);
  col.add_all(check_threefold_liaison(pair, opts.window));
  if (opts.certify) {
    const Window cw = capped(opts.window, opts.max_degree);
    const int a = pair.link.a;
    col.add(renamed(certify_graded_iso(deficiency_module(pair.S, 1),
                                       iterated_deficiency(pair.R, {0, 3}), a,
                                       cw),
                    "certify.rao"));
    col.add(renamed(certify_graded_iso(iterated_deficiency(pair.S, {1, 2}),
                                       iterated_deficiency(pair.R, {1, 1, 3}),
                                       -a, cw),
                    "certify.curve"));
    col.add(renamed(certify_graded_iso(iterated_deficiency(pair.S, {2, 3}),
                                       iterated_deficiency(pair.R, {2, 2, 3}),
                                       -a, cw),
                    "certify.surface"));
  }
  if (opts.oracle) oracle_pair_checks(col, s, pair, opts);
}

void cmd_check_duality(Collector& col, const SessionFile& s,
                       const std::vector<std::string>& rest,
                       const CommandOptions& opts) {
  if (rest.size() != 1)
    fail(ErrorCode::BadArgument, "usage: check-duality <ideal>");
  const SessionIdeal& si = need_ideal(s, rest[0]);
  const ResolvedModule M = resolve_quotient(s.ring, si.ideal.gens);
  if (M.is_zero()) {
    col.add_info("duality.module", "the quotient is the zero module");
    return;
  }
  col.add_all(check_biduality_euler(M, opts.window));
  if (M.dim() == 3) col.add_all(check_duality_d3(M, opts.window));
  if (M.dim() == 4) col.add_all(check_duality_d4(M, opts.window));
  if (M.dim() >= 1) col.add_all(check_s_ell_duality(M, 2, opts.window));
  if (M.dim() >= 3)
    col.add_all(check_generalized_serre_duality(M, opts.window));
  if (opts.oracle)
    oracle_quotient_check(col, s.ring, rest[0], si.ideal.gens, M.series(),
                          capped(opts.window, opts.max_degree));
}

void cmd_check_s2(Collector& col, const SessionFile& s,
                  const std::vector<std::string>& rest,
                  const CommandOptions& opts) {
  const LinkedPair pair = pair_from_args(s, rest);
  col.add_all(check_s2_equivalences(pair, opts.window));
  if (opts.oracle) oracle_pair_checks(col, s, pair, opts);
}

void cmd_certify(Collector& col, const SessionFile& s,
                 const std::vector<std::string>& rest,
                 const CommandOptions& opts) {
  const LinkedPair pair = pair_from_args(s, rest);
  const Window cw = capped(opts.window, opts.max_degree);
  const ResolvedModule K = quotient_presentation(s.ring, pair.J, pair.link.b);
  const ResolvedModule WR = canonical_module(pair.R);
  col.add(certify_graded_iso(K, WR, -pair.link.a, cw));
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "resolve",       "deficiency",      "diagram",
      "link",          "check-surface",   "check-threefold",
      "check-duality", "check-s2",        "certify"};
  return names;
}

CommandResult run_command(const SessionFile& session,
                          const std::vector<std::string>& args,
                          const CommandOptions& opts) {
  ordered_json doc;
  doc["session"] = ordered_json{{"path", session.path},
                                {"hash", hash_string(session.hash)}};
  {
    std::string cmdline;
    for (const auto& a : args) {
      if (!cmdline.empty()) cmdline += " ";
      cmdline += a;
    }
    doc["command"] = cmdline;
  }
  doc["window"] =
      ordered_json{{"lo", opts.window.lo}, {"hi", opts.window.hi}};

  Collector col;
  try {
    if (args.empty()) fail(ErrorCode::BadArgument, "no command given");
    if (opts.window.lo > opts.window.hi)
      fail(ErrorCode::BadArgument, "window lower bound exceeds upper bound");
    const std::string& cmd = args[0];
    const std::vector<std::string> rest(args.begin() + 1, args.end());
    if (cmd == "resolve")
      cmd_resolve(col, session, rest, opts);
    else if (cmd == "deficiency")
      cmd_deficiency(col, session, rest, opts);
    else if (cmd == "diagram")
      cmd_diagram(col, session, rest, opts);
    else if (cmd == "link")
      cmd_link(col, session, rest, opts);
    else if (cmd == "check-surface")
      cmd_check_surface(col, session, rest, opts);
    else if (cmd == "check-threefold")
      cmd_check_threefold(col, session, rest, opts);
    else if (cmd == "check-duality")
      cmd_check_duality(col, session, rest, opts);
    else if (cmd == "check-s2")
      cmd_check_s2(col, session, rest, opts);
    else if (cmd == "certify")
      cmd_certify(col, session, rest, opts);
    else
      fail(ErrorCode::BadArgument, "unknown command `" + cmd + "`");
  } catch (const LiaisonError& e) {
    CheckReport r;
    r.check_id = std::string("error.") + error_code_name(e.code());
    r.status = CheckStatus::Fail;
    r.note = e.what();
    col.checks.clear();
    col.add(std::move(r));
  } catch (const std::exception& e) {
    CheckReport r;
    r.check_id = "error.internal";
    r.status = CheckStatus::Fail;
    r.note = e.what();
    col.checks.clear();
    col.add(std::move(r));
  }

  bool any_fail = false, any_inconclusive = false;
  ordered_json checks = ordered_json::array();
  for (const JCheck& jc : col.checks) {
    const CheckReport& r = jc.r;
    ordered_json c;
    c["id"] = r.check_id;
    c["status"] = status_label(r.status);
    if (r.witness_degree) c["witness_degree"] = *r.witness_degree;
    if (r.lhs) c["lhs"] = *r.lhs;
    if (r.rhs) c["rhs"] = *r.rhs;
    c["note"] = r.note;
    if (jc.extra.is_object())
      for (const auto& [k, v] : jc.extra.items()) c[k] = v;
    checks.push_back(std::move(c));
    if (r.status == CheckStatus::Fail) any_fail = true;
    if (r.status == CheckStatus::Inconclusive ||
        r.status == CheckStatus::PreconditionFailed)
      any_inconclusive = true;
  }
  doc["checks"] = std::move(checks);
  const char* overall =
      any_fail ? "fail" : (any_inconclusive ? "inconclusive" : "pass");
  doc["overall"] = overall;

  CommandResult out;
  out.report = doc.dump(2) + "\n";
  out.exit_code = any_fail ? 1 : (any_inconclusive ? 2 : 0);
  return out;
}

}  // namespace liaison
