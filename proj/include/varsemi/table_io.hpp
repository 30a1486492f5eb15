// The .sgt table format.
//
//   # optional comment lines
//   2
//   0 0
//   1 1
//
// A decimal order n, then n rows of n space-separated element ids; row x
// lists x·0, ..., x·(n-1).  Every line, including the last, ends in '\n' and
// tabs are rejected.

#ifndef VARSEMI_TABLE_IO_HPP_
#define VARSEMI_TABLE_IO_HPP_

#include <string>       // for string
#include <string_view>  // for string_view

#include "core.hpp"

namespace varsemi {

  //! Throws SyntaxError(line, column) for malformed text; build_semigroup's
  //! errors are forwarded unchanged.
  FiniteSemigroup parse_table(std::string_view text,
                              std::size_t      max_order = DEFAULT_MAX_ORDER);

  std::string serialize_table(FiniteSemigroup const& s);

  //! The serialized table on one line, its lines joined by ';' and without
  //! the final newline: "2;0 0;1 1".
  std::string inline_table(FiniteSemigroup const& s);

  FiniteSemigroup parse_inline_table(std::string_view text,
                                     std::size_t      max_order = DEFAULT_MAX_ORDER);

  // 64-bit FNV-1a of inline_table(s), as 16 lowercase hex digits.
  std::string table_hash(FiniteSemigroup const& s);

  FiniteSemigroup read_table_file(std::string const& path,
                                  std::size_t        max_order = DEFAULT_MAX_ORDER);

}  // namespace varsemi

#endif  // VARSEMI_TABLE_IO_HPP_
