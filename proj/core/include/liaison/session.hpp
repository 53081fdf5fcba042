#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "liaison/ideal.hpp"
#include "liaison/poly.hpp"
#include "liaison/ring.hpp"

namespace liaison {

// A named ideal declared in a session file, kept in declaration order.
struct SessionIdeal {
  std::string name;
  Ideal ideal;
};

// A named link declaration: the linked ideal and the Gorenstein ideal it
// lives in, both referenced by name.
struct SessionLink {
  std::string name;
  std::string ideal_name;
  std::string gorenstein_name;
};

// Parsed and validated session file.
//
// Grammar (line oriented, `#` starts a comment, blank lines ignored,
// whitespace between tokens is free):
//
//   ring <p> <n>                      exactly once, before any other statement
//   ideal <name> = <poly>, <poly>, ...
//   link <name> : <ideal-name> in <ideal-name>
//
// All names share one namespace and must be unique; link statements may only
// reference previously declared ideals.  Polynomials must parse in the
// declared ring and be homogeneous.
struct SessionFile {
  std::string path;
  std::uint64_t hash = 0;  // FNV-1a 64 over the raw file bytes
  RingPtr ring;
  std::vector<SessionIdeal> ideals;
  std::vector<SessionLink> links;

  const SessionIdeal* find_ideal(const std::string& name) const;
  const SessionLink* find_link(const std::string& name) const;
};

// FNV-1a 64-bit hash of a byte string (stable across platforms and runs).
std::uint64_t fnv1a64(const std::string& bytes);

// Parse a session from an in-memory buffer; `path` is used for error
// messages and recorded in the result.  Throws LiaisonError(ParseError)
// with a `path:line:column` prefix on malformed input.
SessionFile parse_session_text(const std::string& text,
                               const std::string& path);

// Read and parse a session file from disk.
SessionFile parse_session(const std::string& path);

}  // namespace liaison
