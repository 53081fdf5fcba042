#include "liaison/session.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "liaison/errors.hpp"

namespace liaison {

namespace {

[[noreturn]] void parse_fail(const std::string& path, int line, int col,
                             const std::string& msg) {
  std::ostringstream os;
  os << path << ":" << line << ":" << col << ": " << msg;
  fail(ErrorCode::ParseError, os.str());
}

bool is_ident(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
    return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Column (1-based) of the first occurrence of `needle` in `line`, for error
// messages; falls back to column 1.
int col_of(const std::string& line, const std::string& needle) {
  size_t pos = needle.empty() ? std::string::npos : line.find(needle);
  return pos == std::string::npos ? 1 : static_cast<int>(pos) + 1;
}

// Message of a wrapped error without its own code-name prefix, so the
// rethrown ParseError carries the prefix exactly once.
std::string inner_message(const LiaisonError& e) {
  std::string msg = e.what();
  std::string prefix = std::string(error_code_name(e.code())) + ": ";
  if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
  return msg;
}

}  // namespace

const SessionIdeal* SessionFile::find_ideal(const std::string& name) const {
  for (const auto& si : ideals)
    if (si.name == name) return &si;
  return nullptr;
}

const SessionLink* SessionFile::find_link(const std::string& name) const {
  for (const auto& sl : links)
    if (sl.name == name) return &sl;
  return nullptr;
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

SessionFile parse_session_text(const std::string& text,
                               const std::string& path) {
  SessionFile out;
  out.path = path;
  out.hash = fnv1a64(text);

  std::map<std::string, int> names;  // name -> declaring line

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    size_t hash_pos = line.find('#');
    if (hash_pos != std::string::npos) line = line.substr(0, hash_pos);
    line = trim(line);
    if (line.empty()) continue;

    std::istringstream ls(line);
    std::string keyword;
    ls >> keyword;

    if (keyword == "ring") {
      if (out.ring)
        parse_fail(path, lineno, 1, "duplicate ring declaration");
      long long p = 0, n = 0;
      if (!(ls >> p >> n) || p <= 0 || n <= 0)
        parse_fail(path, lineno, col_of(raw, "ring"),
                   "expected `ring <p> <n>` with positive integers");
      std::string extra;
      if (ls >> extra)
        parse_fail(path, lineno, col_of(raw, extra),
                   "unexpected token after ring declaration: " + extra);
      try {
        out.ring = make_ring(static_cast<std::uint32_t>(p),
                             static_cast<int>(n));
      } catch (const LiaisonError& e) {
        parse_fail(path, lineno, col_of(raw, "ring"), inner_message(e));
      }
      continue;
    }

    if (!out.ring)
      parse_fail(path, lineno, 1,
                 "the session must declare `ring <p> <n>` before `" +
                     keyword + "`");

    if (keyword == "ideal") {
      size_t eq = line.find('=');
      if (eq == std::string::npos)
        parse_fail(path, lineno, col_of(raw, keyword),
                   "expected `ideal <name> = <poly>, ...`");
      std::string head = trim(line.substr(5, eq - 5));
      if (!is_ident(head))
        parse_fail(path, lineno, col_of(raw, head.empty() ? "=" : head),
                   "invalid ideal name `" + head + "`");
      if (names.count(head))
        parse_fail(path, lineno, col_of(raw, head),
                   "duplicate name `" + head + "` (first declared on line " +
                       std::to_string(names[head]) + ")");
      std::string body = line.substr(eq + 1);
      std::vector<Polynomial> gens;
      size_t start = 0;
      while (start <= body.size()) {
        size_t comma = body.find(',', start);
        std::string piece =
            trim(comma == std::string::npos ? body.substr(start)
                                            : body.substr(start, comma - start));
        if (piece.empty())
          parse_fail(path, lineno, col_of(raw, ","),
                     "empty generator in ideal `" + head + "`");
        try {
          gens.push_back(parse_polynomial(out.ring, piece));
        } catch (const LiaisonError& e) {
          parse_fail(path, lineno, col_of(raw, piece), inner_message(e));
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      try {
        out.ideals.push_back({head, make_ideal(out.ring, gens)});
      } catch (const LiaisonError& e) {
        parse_fail(path, lineno, col_of(raw, head), inner_message(e));
      }
      names[head] = lineno;
      continue;
    }

    if (keyword == "link") {
      // link <name> : <ideal> in <ideal>
      size_t colon = line.find(':');
      if (colon == std::string::npos)
        parse_fail(path, lineno, col_of(raw, keyword),
                   "expected `link <name> : <ideal> in <ideal>`");
      std::string head = trim(line.substr(4, colon - 4));
      if (!is_ident(head))
        parse_fail(path, lineno, col_of(raw, head.empty() ? ":" : head),
                   "invalid link name `" + head + "`");
      if (names.count(head))
        parse_fail(path, lineno, col_of(raw, head),
                   "duplicate name `" + head + "` (first declared on line " +
                       std::to_string(names[head]) + ")");
      std::istringstream body(line.substr(colon + 1));
      std::string iname, kw, bname, extra;
      if (!(body >> iname >> kw >> bname) || kw != "in")
        parse_fail(path, lineno, col_of(raw, ":"),
                   "expected `link <name> : <ideal> in <ideal>`");
      if (body >> extra)
        parse_fail(path, lineno, col_of(raw, extra),
                   "unexpected token after link declaration: " + extra);
      for (const std::string& ref : {iname, bname}) {
        if (!is_ident(ref))
          parse_fail(path, lineno, col_of(raw, ref),
                     "invalid ideal reference `" + ref + "`");
        if (!out.find_ideal(ref))
          parse_fail(path, lineno, col_of(raw, ref),
                     "reference to undeclared ideal `" + ref + "`");
      }
      out.links.push_back({head, iname, bname});
      names[head] = lineno;
      continue;
    }

    parse_fail(path, lineno, col_of(raw, keyword),
               "unknown statement `" + keyword +
                   "` (expected ring, ideal, or link)");
  }

  if (!out.ring)
    parse_fail(path, lineno == 0 ? 1 : lineno, 1,
               "the session declares no ring");
  return out;
}

SessionFile parse_session(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    fail(ErrorCode::ParseError, path + ": cannot open session file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_session_text(buf.str(), path);
}

}  // namespace liaison
