#include "varsemi/table_io.hpp"

#include <fstream>  // for ifstream
#include <sstream>  // for ostringstream
#include <vector>   // for vector

#include <fmt/format.h>

namespace varsemi {

  namespace {
    struct Token {
      std::uint64_t value;
      std::size_t   column;
    };

    // Space-separated decimal numbers; columns are 1-based.
    std::vector<Token> tokenize(std::string_view line, std::size_t lineno) {
      std::vector<Token> tokens;
      std::size_t        i = 0;
      while (i < line.size()) {
        char const c = line[i];
        if (c == ' ') {
          ++i;
          continue;
        }
        if (c == '\t') {
          throw SyntaxError(lineno, i + 1, "tab character");
        }
        if (c < '0' || c > '9') {
          throw SyntaxError(lineno, i + 1, fmt::format("unexpected character '{}'", c));
        }
        Token t{0, i + 1};
        while (i < line.size() && line[i] >= '0' && line[i] <= '9') {
          t.value = t.value * 10 + (line[i] - '0');
          if (t.value > 0xFFFFFFFFULL) {
            throw SyntaxError(lineno, t.column, "number too large");
          }
          ++i;
        }
        tokens.push_back(t);
      }
      return tokens;
    }
  }  // namespace

  FiniteSemigroup parse_table(std::string_view text, std::size_t max_order) {
    std::vector<std::string_view> lines;
    std::size_t                   start = 0;
    while (start < text.size()) {
      auto const nl = text.find('\n', start);
      if (nl == std::string_view::npos) {
        throw SyntaxError(lines.size() + 1, text.size() - start + 1, "missing trailing newline");
      }
      lines.push_back(text.substr(start, nl - start));
      start = nl + 1;
    }

    std::size_t               order = 0;
    bool                      have_order = false;
    std::size_t               rows_read  = 0;
    std::vector<element_type> table;
    for (std::size_t k = 0; k < lines.size(); ++k) {
      auto const line   = lines[k];
      auto const lineno = k + 1;
      if (!line.empty() && line.front() == '#') {
        continue;
      }
      auto const tokens = tokenize(line, lineno);
      if (!have_order) {
        if (tokens.size() != 1) {
          throw SyntaxError(lineno,
                            tokens.size() > 1 ? tokens[1].column : 1,
                            "expected the order on a line by itself");
        }
        order      = tokens[0].value;
        have_order = true;
        if (order == 0) {
          throw SyntaxError(lineno, tokens[0].column, "order must be positive");
        }
        if (order > max_order || order > HARD_MAX_ORDER) {
          throw OrderTooLarge(order, std::min(max_order, HARD_MAX_ORDER));
        }
        table.reserve(order * order);
        continue;
      }
      if (rows_read == order) {
        throw SyntaxError(lineno, 1, "unexpected content after the last row");
      }
      if (tokens.size() != order) {
        throw SyntaxError(lineno,
                          tokens.size() > order ? tokens[order].column : line.size() + 1,
                          fmt::format("expected {} entries, found {}", order, tokens.size()));
      }
      for (auto const& t : tokens) {
        table.push_back(static_cast<element_type>(t.value));
      }
      ++rows_read;
    }
    if (!have_order) {
      throw SyntaxError(lines.size() + 1, 1, "missing order line");
    }
    if (rows_read != order) {
      throw SyntaxError(lines.size() + 1,
                        1,
                        fmt::format("expected {} rows, found {}", order, rows_read));
    }
    return build_semigroup(order, std::move(table), {}, max_order);
  }

  std::string serialize_table(FiniteSemigroup const& s) {
    std::string out = std::to_string(s.order());
    out += '\n';
    for (element_type x = 0; x < s.order(); ++x) {
      for (element_type y = 0; y < s.order(); ++y) {
        if (y != 0) {
          out += ' ';
        }
        out += std::to_string(s.product(x, y));
      }
      out += '\n';
    }
    return out;
  }

  std::string inline_table(FiniteSemigroup const& s) {
    auto out = serialize_table(s);
    out.pop_back();
    for (auto& c : out) {
      if (c == '\n') {
        c = ';';
      }
    }
    return out;
  }

  FiniteSemigroup parse_inline_table(std::string_view text, std::size_t max_order) {
    std::string multiline(text);
    for (auto& c : multiline) {
      if (c == ';') {
        c = '\n';
      } else if (c == '\n') {
        throw SyntaxError(1, &c - multiline.data() + 1, "newline in inline table");
      }
    }
    multiline += '\n';
    return parse_table(multiline, max_order);
  }

  std::string table_hash(FiniteSemigroup const& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : inline_table(s)) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    return fmt::format("{:016x}", h);
  }

  FiniteSemigroup read_table_file(std::string const& path, std::size_t max_order) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error(fmt::format("cannot open '{}'", path));
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_table(buf.str(), max_order);
  }

}  // namespace varsemi
