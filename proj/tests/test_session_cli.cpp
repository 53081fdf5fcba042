#include <doctest.h>

#include <json.hpp>

#include <string>
#include <vector>

#include "liaison/commands.hpp"
#include "liaison/errors.hpp"
#include "liaison/session.hpp"

using namespace liaison;
using nlohmann::json;

namespace {

// A session exercising every statement form: comments, blank lines, loose
// whitespace, a zero ideal, multi-generator ideals, and a link.
const char* kFullSession =
    "# twisted-cubic playground\n"
    "\n"
    "ring 32003 4\n"
    "ideal A = 0\n"
    "  ideal   E1 =  x1*x3 - x2^2 ,  x0*x3 - x1*x2, x0*x2 - x1^2\n"
    "ideal q2 = x0*x3 - x1*x2   # one of the quadrics\n"
    "link L : E1 in q2\n";

const char* kPlanesSession =
    "ring 32003 5\n"
    "ideal E2 = x0*x2, x0*x3, x1*x2, x1*x3\n"
    "ideal b22 = x0*x2, x1*x3\n"
    "link L23 : E2 in b22\n";

const char* kMixedSession =
    "ring 32003 3\n"
    "ideal F2 = x0*x1^2, x0*x1*x2, x0*x2^2\n"
    "ideal q = x2^2\n";

ErrorCode parse_code(const std::string& text) {
  try {
    parse_session_text(text, "mem");
  } catch (const LiaisonError& e) {
    return e.code();
  }
  FAIL("expected a parse error");
  return ErrorCode::ParseError;
}

std::string parse_message(const std::string& text) {
  try {
    parse_session_text(text, "mem");
  } catch (const LiaisonError& e) {
    return e.what();
  }
  FAIL("expected a parse error");
  return {};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

const json& find_check(const json& doc, const std::string& id) {
  for (const auto& c : doc.at("checks"))
    if (c.at("id") == id) return c;
  static json missing;
  FAIL("missing check ", id);
  return missing;
}

bool has_check(const json& doc, const std::string& id) {
  for (const auto& c : doc.at("checks"))
    if (c.at("id") == id) return true;
  return false;
}

long long hf_at(const json& check, const std::string& key, int degree) {
  for (const auto& pair : check.at(key))
    if (pair.at(0).get<int>() == degree) return pair.at(1).get<long long>();
  FAIL("degree ", degree, " not tabulated");
  return 0;
}

}  // namespace

TEST_CASE("fnv1a64 matches the published reference vectors") {
  CHECK(fnv1a64("") == 14695981039346656037ULL);
  CHECK(fnv1a64("a") == 12638187200555641996ULL);
  CHECK(fnv1a64("foobar") == 9625390261332436968ULL);
}

TEST_CASE("session parsing accepts the full grammar") {
  const SessionFile s = parse_session_text(kFullSession, "mem/full");
  CHECK(s.path == "mem/full");
  CHECK(s.hash == fnv1a64(kFullSession));
  REQUIRE(s.ring != nullptr);
  CHECK(s.ring->characteristic() == 32003);
  CHECK(s.ring->nvars == 4);
  REQUIRE(s.ideals.size() == 3);
  CHECK(s.ideals[0].name == "A");
  CHECK(s.ideals[0].ideal.gens.empty());  // the zero ideal keeps no generators
  CHECK(s.ideals[1].name == "E1");
  CHECK(s.ideals[1].ideal.gens.size() == 3);
  CHECK(s.ideals[2].ideal.gens.size() == 1);
  REQUIRE(s.links.size() == 1);
  CHECK(s.links[0].name == "L");
  CHECK(s.links[0].ideal_name == "E1");
  CHECK(s.links[0].gorenstein_name == "q2");
  CHECK(s.find_ideal("E1") == &s.ideals[1]);
  CHECK(s.find_ideal("nope") == nullptr);
  CHECK(s.find_link("L") == &s.links[0]);
  CHECK(s.find_link("E1") == nullptr);
}

TEST_CASE("session parsing reports positioned errors") {
  SUBCASE("missing ring") {
    CHECK(parse_code("# nothing\n") == ErrorCode::ParseError);
    CHECK(contains(parse_message("# nothing\n"), "declares no ring"));
  }
  SUBCASE("statement before ring") {
    const std::string msg = parse_message("ideal I = x0\nring 32003 2\n");
    CHECK(contains(msg, "mem:1:1"));
    CHECK(contains(msg, "before `ideal`"));
  }
  SUBCASE("duplicate ring") {
    CHECK(contains(parse_message("ring 32003 2\nring 32003 2\n"),
                   "mem:2:1: duplicate ring"));
  }
  SUBCASE("composite characteristic") {
    const std::string msg = parse_message("ring 32004 2\n");
    CHECK(contains(msg, "mem:1:1"));
    CHECK(contains(msg, "prime"));
  }
  SUBCASE("unknown statement") {
    CHECK(contains(parse_message("ring 32003 2\nfrobnicate x\n"),
                   "mem:2:1: unknown statement `frobnicate`"));
  }
  SUBCASE("duplicate name cites the first declaration") {
    const std::string msg = parse_message(
        "ring 32003 3\nideal I = x0\nideal I = x1\n");
    CHECK(contains(msg, "mem:3:7: duplicate name `I`"));
    CHECK(contains(msg, "first declared on line 2"));
  }
  SUBCASE("undeclared link reference") {
    const std::string msg =
        parse_message("ring 32003 3\nideal I = x0*x1\nlink L : I in b\n");
    CHECK(contains(msg, "mem:3:15"));
    CHECK(contains(msg, "undeclared ideal `b`"));
  }
  SUBCASE("polynomial syntax error carries line and column") {
    const std::string msg =
        parse_message("ring 32003 3\nideal I = x0*x2 - + x1\n");
    CHECK(contains(msg, "mem:2:11"));
    CHECK(contains(msg, "expected term"));
    // the inner code prefix is stripped, so it appears exactly once
    CHECK(msg.find("ParseError") == msg.rfind("ParseError"));
  }
  SUBCASE("inhomogeneous generator") {
    CHECK(contains(parse_message("ring 32003 3\nideal I = x0^2 + x1\n"),
                   "homogeneous"));
  }
  SUBCASE("empty generator") {
    CHECK(contains(parse_message("ring 32003 3\nideal I = x0,,x1\n"),
                   "empty generator"));
  }
  SUBCASE("trailing tokens on a link") {
    const std::string msg = parse_message(
        "ring 32003 3\nideal I = x0*x1\nideal b = x0*x1\n"
        "link L : I in b extra\n");
    CHECK(contains(msg, "unexpected token"));
    CHECK(contains(msg, "extra"));
  }
}

TEST_CASE("resolve reports invariants, Betti numbers, and Hilbert data") {
  const SessionFile s = parse_session_text(kFullSession, "mem/full");
  const CommandResult res = run_command(s, {"resolve", "E1"}, {});
  CHECK(res.exit_code == 0);
  const json doc = json::parse(res.report);
  CHECK(doc.at("overall") == "pass");
  CHECK(doc.at("command") == "resolve E1");
  CHECK(doc.at("session").at("path") == "mem/full");
  CHECK(contains(doc.at("session").at("hash").get<std::string>(), "fnv1a64:"));
  CHECK(doc.at("window").at("lo") == -12);
  CHECK(doc.at("window").at("hi") == 12);

  const json& inv = find_check(doc, "resolve.invariants");
  const std::string note = inv.at("note").get<std::string>();
  CHECK(contains(note, "dim=2"));
  CHECK(contains(note, "depth=2"));
  CHECK(contains(note, "regularity=1"));
  CHECK(contains(note, "degree=3"));
  CHECK(contains(note, "cohen_macaulay=1"));

  const json& betti = find_check(doc, "resolve.betti");
  CHECK(betti.at("note") == "total ranks 1;3;2");
  CHECK(betti.at("betti").at("1").size() == 1);  // three quadrics in one slot

  const json& hf = find_check(doc, "resolve.hilbert");
  CHECK(hf.at("hilbert").size() == 25);  // one entry per degree in the window
  CHECK(hf_at(hf, "hilbert", -3) == 0);
  CHECK(hf_at(hf, "hilbert", 0) == 1);
  CHECK(hf_at(hf, "hilbert", 1) == 4);
  CHECK(hf_at(hf, "hilbert", 5) == 16);  // 3*mu + 1 on the cubic curve
}

TEST_CASE("resolve reports the zero module for the unit ideal") {
  const SessionFile s =
      parse_session_text("ring 32003 2\nideal one = 1\n", "mem");
  const CommandResult res = run_command(s, {"resolve", "one"}, {});
  CHECK(res.exit_code == 0);
  const json doc = json::parse(res.report);
  CHECK(has_check(doc, "resolve.module"));
  CHECK(doc.at("overall") == "pass");
}

TEST_CASE("deficiency validates the cohomological index") {
  const SessionFile s = parse_session_text(kFullSession, "mem/full");
  {
    const CommandResult res = run_command(s, {"deficiency", "E1", "1"}, {});
    CHECK(res.exit_code == 0);
    const json doc = json::parse(res.report);
    CHECK(doc.at("checks").size() == 1);
    const json& d1 = find_check(doc, "deficiency.d1");
    CHECK(d1.at("note") == "zero");  // the cubic curve is arithmetically CM
    CHECK(hf_at(d1, "hilbert", 0) == 0);
  }
  {
    const CommandResult res = run_command(s, {"deficiency", "E1"}, {});
    const json doc = json::parse(res.report);
    CHECK(doc.at("checks").size() == 3);  // d0, d1, d2
    CHECK(find_check(doc, "deficiency.d2").at("note") !=
          "zero");  // the canonical module
  }
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"deficiency", "E1", "7"},
        std::vector<std::string>{"deficiency", "E1", "x"},
        std::vector<std::string>{"deficiency", "E1", "1z"}}) {
    const CommandResult res = run_command(s, args, {});
    CHECK(res.exit_code == 1);
    const json doc = json::parse(res.report);
    CHECK(doc.at("checks").size() == 1);
    CHECK(has_check(doc, "error.BadArgument"));
  }
}

TEST_CASE("link command passes on a complete-intersection link") {
  const SessionFile s = parse_session_text(kPlanesSession, "mem/planes");
  const CommandResult res = run_command(s, {"link", "L23"}, {});
  CHECK(res.exit_code == 0);
  const json doc = json::parse(res.report);
  CHECK(doc.at("overall") == "pass");
  CHECK(find_check(doc, "link.gorenstein").at("lhs") == -1);  // a-invariant
  CHECK(find_check(doc, "link.degree").at("lhs") == 4);
  CHECK(find_check(doc, "link.degree").at("rhs") == 4);
  for (const char* id : {"link.double", "liaison.sequence", "liaison.kernel",
                         "liaison.canonical_sequence", "liaison.lambda.0",
                         "liaison.lambda.1"})
    CHECK(find_check(doc, id).at("status") == "pass");

  // the inline pair form runs the same checks
  const CommandResult via =
      run_command(s, {"link", "E2", "via", "b22"}, {});
  CHECK(via.exit_code == 0);
  const json vdoc = json::parse(via.report);
  CHECK(vdoc.at("command") == "link E2 via b22");
  CHECK(vdoc.at("checks").size() == doc.at("checks").size());
}

TEST_CASE("operation errors become failing checks, not crashes") {
  const SessionFile s = parse_session_text(kMixedSession, "mem/mixed");
  SUBCASE("linking ideal not contained in the linked ideal") {
    const CommandResult res = run_command(s, {"link", "F2", "via", "q"}, {});
    CHECK(res.exit_code == 1);
    const json doc = json::parse(res.report);
    CHECK(doc.at("overall") == "fail");
    CHECK(doc.at("checks").size() == 1);
    CHECK(has_check(doc, "error.NotContained"));
  }
  SUBCASE("unknown command") {
    const CommandResult res = run_command(s, {"frob", "F2"}, {});
    CHECK(res.exit_code == 1);
    CHECK(has_check(json::parse(res.report), "error.BadArgument"));
  }
  SUBCASE("unknown ideal") {
    const CommandResult res = run_command(s, {"resolve", "nope"}, {});
    CHECK(res.exit_code == 1);
    const json doc = json::parse(res.report);
    CHECK(contains(find_check(doc, "error.BadArgument")
                       .at("note")
                       .get<std::string>(),
                   "unknown ideal `nope`"));
  }
  SUBCASE("unknown link") {
    const CommandResult res = run_command(s, {"check-s2", "nope"}, {});
    CHECK(res.exit_code == 1);
    CHECK(has_check(json::parse(res.report), "error.BadArgument"));
  }
  SUBCASE("degenerate window") {
    CommandOptions opts;
    opts.window = {3, -3};
    const CommandResult res = run_command(s, {"resolve", "F2"}, opts);
    CHECK(res.exit_code == 1);
    CHECK(has_check(json::parse(res.report), "error.BadArgument"));
  }
  SUBCASE("mixed-dimension diagram") {
    const CommandResult res = run_command(s, {"diagram", "F2"}, {});
    CHECK(res.exit_code == 1);
    CHECK(has_check(json::parse(res.report), "error.NotEquidimensional"));
  }
}

TEST_CASE("duality survey gates inapplicable checks instead of failing") {
  const SessionFile s = parse_session_text(kMixedSession, "mem/mixed");
  const CommandResult res = run_command(s, {"check-duality", "F2"}, {});
  CHECK(res.exit_code == 2);
  const json doc = json::parse(res.report);
  CHECK(doc.at("overall") == "inconclusive");
  CHECK(find_check(doc, "biduality.euler").at("status") == "pass");
  CHECK(find_check(doc, "s_ell.gate").at("status") == "precondition_failed");
  // dimension-2 input: the dim >= 3 suites are skipped, not errors
  CHECK(!has_check(doc, "serre_general.gate"));
  for (const auto& c : doc.at("checks"))
    CHECK(!contains(c.at("id").get<std::string>(), "error."));
}

TEST_CASE("reports are byte-identical across repeated invocations") {
  const SessionFile planes = parse_session_text(kPlanesSession, "mem/planes");
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"resolve", "E2"},
        std::vector<std::string>{"diagram", "E2"},
        std::vector<std::string>{"check-s2", "L23"},
        std::vector<std::string>{"check-surface", "L23"}}) {
    const CommandResult a = run_command(planes, args, {});
    const CommandResult b = run_command(planes, args, {});
    CAPTURE(args[0]);
    CHECK(a.report == b.report);
    CHECK(a.exit_code == b.exit_code);
  }
}

TEST_CASE("oracle flag cross-checks Hilbert data over the capped window") {
  const SessionFile s = parse_session_text(kFullSession, "mem/full");
  CommandOptions opts;
  opts.window = {-4, 4};
  opts.oracle = true;
  const CommandResult res = run_command(s, {"resolve", "E1"}, opts);
  CHECK(res.exit_code == 0);
  const json doc = json::parse(res.report);
  CHECK(find_check(doc, "oracle.hilbert.E1").at("status") == "pass");

  const CommandResult defres = run_command(s, {"deficiency", "E1"}, opts);
  CHECK(defres.exit_code == 0);
  const json ddoc = json::parse(defres.report);
  for (int i = 0; i <= 2; ++i)
    CHECK(find_check(ddoc, "oracle.ext." + std::to_string(i)).at("status") ==
          "pass");
}

TEST_CASE("certify flag upgrades liaison identities to certificates") {
  const SessionFile s = parse_session_text(kPlanesSession, "mem/planes");
  CommandOptions opts;
  opts.window = {-6, 6};
  opts.certify = true;
  const CommandResult res = run_command(s, {"check-surface", "L23"}, opts);
  CHECK(res.exit_code == 0);
  const json doc = json::parse(res.report);
  CHECK(find_check(doc, "certify.rao").at("status") == "pass");
  CHECK(find_check(doc, "certify.curve").at("status") == "pass");

  const CommandResult cres = run_command(s, {"certify", "L23"}, opts);
  CHECK(cres.exit_code == 0);
  CHECK(find_check(json::parse(cres.report), "certify.iso").at("status") ==
        "pass");
}

TEST_CASE("command vocabulary is stable") {
  const auto& names = command_names();
  CHECK(names.size() == 9);
  CHECK(names.front() == "resolve");
  for (const char* n : {"link", "check-surface", "check-threefold",
                        "check-duality", "check-s2", "certify"})
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
}
