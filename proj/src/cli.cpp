#include "dspan/cli.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <utility>

#include "json.hpp"

#include "dspan/errors.hpp"
#include "dspan/oracle.hpp"
#include "dspan/span.hpp"

namespace dspan {

namespace {

using njson = nlohmann::ordered_json;

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

// Strict digit run for standalone numeric arguments (n, i, --limit).
BigInt parse_nonneg(const std::string& text, const char* what) {
  if (text.empty()) {
    throw parse_error(std::string(what) + ": expected digit", 1);
  }
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!is_digit(text[i])) {
      throw parse_error(std::string(what) + ": expected digit", i + 1);
    }
  }
  return BigInt(text);
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

constexpr const char* kUsage =
    "usage: dspan [--json] <command> ...\n"
    "\n"
    "commands:\n"
    "  normalize <C>              print the normal form of C\n"
    "  eq [--status] <C1> <C2>    decide span(C1) == span(C2); with --status\n"
    "                             the exit code is 0 for equal, 1 for unequal\n"
    "  member <C> <n>             decide n in span(C)\n"
    "  mex <C>                    smallest value not in span(C)\n"
    "  size <C>                   number of values in span(C)\n"
    "  decompose <C>              irreducible blocks of a normal C\n"
    "  enumerate <C> --limit <L>  first L span elements in increasing order\n"
    "  exchange-check <C> <i>     whether exchanging d tokens d^i for one\n"
    "                             d^(i+1) keeps the span\n"
    "  oracle span <C>            brute-force span, one element per line\n"
    "  oracle eq <C1> <C2>        brute-force span equality\n"
    "  oracle member <C> <n>      brute-force membership\n"
    "\n"
    "collections are written d:[a_0,a_1,...,a_k], e.g. 2:[3,2,0]; --json\n"
    "switches any command to a single-line JSON object on stdout\n";

int usage_error(std::ostream& err, const std::string& message) {
  err << "dspan: " << message << " (try 'dspan --help')\n";
  return 2;
}

// Indices past the top place all behave the same (multiplicity zero), so a
// huge textual index can be clamped to the first out-of-range place.
std::size_t index_argument(const DCollection& c, const BigInt& raw) {
  return raw < c.places() ? raw.convert_to<std::size_t>() : c.places();
}

void print_elements_text(std::ostream& out, const std::vector<BigInt>& xs) {
  for (const BigInt& x : xs) out << x.str() << '\n';
}

njson elements_json(const std::vector<BigInt>& xs) {
  njson arr = njson::array();
  for (const BigInt& x : xs) arr.push_back(x.str());
  return arr;
}

}  // namespace

DCollection parse_collection(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const char* message) -> void {
    throw parse_error(message, pos + 1);
  };
  auto skip_ws = [&] {
    while (pos < text.size() && is_space(text[pos])) ++pos;
  };
  auto scan_digits = [&]() -> std::string {
    if (pos >= text.size() || !is_digit(text[pos])) fail("expected digit");
    std::string digits;
    while (pos < text.size() && is_digit(text[pos])) digits += text[pos++];
    return digits;
  };

  const std::size_t base_pos = pos;
  const BigInt base(scan_digits());
  if (base < 2) throw parse_error("base must be at least 2", base_pos + 1);
  if (pos >= text.size() || text[pos] != ':') fail("expected ':'");
  ++pos;
  if (pos >= text.size() || text[pos] != '[') fail("expected '['");
  ++pos;

  std::vector<BigInt> mults;
  skip_ws();
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
  } else {
    for (;;) {
      skip_ws();
      mults.emplace_back(scan_digits());
      skip_ws();
      if (pos >= text.size()) fail("expected ',' or ']'");
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ']') {
        ++pos;
        break;
      }
      fail("expected ',' or ']'");
    }
  }
  if (pos != text.size()) fail("unexpected trailing characters");
  return DCollection(base, std::move(mults));
}

std::string format_collection(const DCollection& a) {
  std::string out = a.base().str();
  out += ":[";
  for (std::size_t i = 0; i < a.places(); ++i) {
    if (i > 0) out += ',';
    out += a.mults()[i].str();
  }
  out += ']';
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  bool json = false;
  bool status = false;
  std::optional<std::string> limit_text;
  std::vector<std::string> words;

  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& arg = args[i];
    if (arg == "--json") {
      json = true;
    } else if (arg == "--status") {
      status = true;
    } else if (arg == "--limit") {
      if (i + 1 == args.size()) return usage_error(err, "--limit requires a value");
      limit_text = args[++i];
    } else if (arg == "--help" || arg == "-h") {
      out << kUsage;
      return 0;
    } else if (arg.size() > 1 && arg[0] == '-' && !is_digit(arg[1])) {
      return usage_error(err, "unknown option '" + arg + "'");
    } else {
      words.push_back(arg);
    }
  }
  if (words.empty()) return usage_error(err, "missing command");

  const std::string& cmd = words[0];
  auto arity = [&](std::size_t n) -> bool { return words.size() == n + 1; };

  try {
    if (cmd == "normalize") {
      if (!arity(1)) return usage_error(err, "normalize expects one collection");
      const std::string literal =
          format_collection(normalize(parse_collection(words[1])));
      if (json) {
        out << njson{{"normal_form", literal}}.dump() << '\n';
      } else {
        out << literal << '\n';
      }
      return 0;
    }

    if (cmd == "eq") {
      if (!arity(2)) return usage_error(err, "eq expects two collections");
      const bool equal = span_equal(parse_collection(words[1]),
                                    parse_collection(words[2]));
      if (json) {
        out << njson{{"equal", equal}}.dump() << '\n';
      } else {
        out << bool_text(equal) << '\n';
      }
      return status && !equal ? 1 : 0;
    }

    if (cmd == "member") {
      if (!arity(2)) return usage_error(err, "member expects a collection and a value");
      const DCollection c = parse_collection(words[1]);
      const bool member = contains(c, parse_nonneg(words[2], "n"));
      if (json) {
        out << njson{{"member", member}}.dump() << '\n';
      } else {
        out << bool_text(member) << '\n';
      }
      return 0;
    }

    if (cmd == "mex") {
      if (!arity(1)) return usage_error(err, "mex expects one collection");
      const BigInt value = mex(parse_collection(words[1]));
      if (json) {
        out << njson{{"mex", value.str()}}.dump() << '\n';
      } else {
        out << value.str() << '\n';
      }
      return 0;
    }

    if (cmd == "size") {
      if (!arity(1)) return usage_error(err, "size expects one collection");
      const BigInt value = span_size(parse_collection(words[1]));
      if (json) {
        out << njson{{"size", value.str()}}.dump() << '\n';
      } else {
        out << value.str() << '\n';
      }
      return 0;
    }

    if (cmd == "decompose") {
      if (!arity(1)) return usage_error(err, "decompose expects one collection");
      const Decomposition dec = decompose(parse_collection(words[1]));
      if (json) {
        njson blocks = njson::array();
        for (const IrreducibleBlock& b : dec.blocks) {
          blocks.push_back(njson{{"shift", b.shift},
                                 {"top", b.top},
                                 {"sum", b.block_sum.str()},
                                 {"len", b.length.str()}});
        }
        out << njson{{"blocks", blocks}}.dump() << '\n';
      } else {
        for (const IrreducibleBlock& b : dec.blocks) {
          out << "shift=" << b.shift << " top=" << b.top << " sum="
              << b.block_sum.str() << " len=" << b.length.str() << '\n';
        }
      }
      return 0;
    }

    if (cmd == "enumerate") {
      if (!arity(1)) return usage_error(err, "enumerate expects one collection");
      if (!limit_text) return usage_error(err, "enumerate requires --limit");
      const BigInt raw = parse_nonneg(*limit_text, "limit");
      if (raw > std::numeric_limits<std::uint64_t>::max()) {
        throw parse_error("limit: value too large", 1);
      }
      const std::vector<BigInt> elements =
          enumerate_span(parse_collection(words[1]), to_u64(raw));
      if (json) {
        out << njson{{"elements", elements_json(elements)}}.dump() << '\n';
      } else {
        print_elements_text(out, elements);
      }
      return 0;
    }

    if (cmd == "exchange-check") {
      if (!arity(2)) return usage_error(err, "exchange-check expects a collection and a place");
      const DCollection c = parse_collection(words[1]);
      const std::size_t i = index_argument(c, parse_nonneg(words[2], "i"));
      const bool preserves = exchange_preserves_span(c, i);
      if (json) {
        out << njson{{"preserves", preserves}}.dump() << '\n';
      } else {
        out << (preserves ? "preserves" : "changes") << '\n';
      }
      return 0;
    }

    if (cmd == "oracle") {
      if (words.size() < 2) {
        return usage_error(err, "oracle expects a subcommand (span, eq or member)");
      }
      const std::string& sub = words[1];

      if (sub == "span") {
        if (!arity(2)) return usage_error(err, "oracle span expects one collection");
        const SpanSet span = oracle_span(parse_collection(words[2]));
        if (json) {
          njson arr = njson::array();
          for (std::uint64_t x : span.elements) arr.push_back(std::to_string(x));
          out << njson{{"elements", arr}}.dump() << '\n';
        } else {
          for (std::uint64_t x : span.elements) out << x << '\n';
        }
        return 0;
      }

      if (sub == "eq") {
        if (!arity(3)) return usage_error(err, "oracle eq expects two collections");
        const bool equal = oracle_equal(parse_collection(words[2]),
                                        parse_collection(words[3]));
        if (json) {
          out << njson{{"equal", equal}}.dump() << '\n';
        } else {
          out << bool_text(equal) << '\n';
        }
        return status && !equal ? 1 : 0;
      }

      if (sub == "member") {
        if (!arity(3)) return usage_error(err, "oracle member expects a collection and a value");
        const DCollection c = parse_collection(words[2]);
        const bool member = oracle_contains(c, parse_nonneg(words[3], "n"));
        if (json) {
          out << njson{{"member", member}}.dump() << '\n';
        } else {
          out << bool_text(member) << '\n';
        }
        return 0;
      }

      return usage_error(err, "unknown oracle subcommand '" + sub + "'");
    }

    return usage_error(err, "unknown command '" + cmd + "'");
  } catch (const parse_error& e) {
    err << "dspan: " << e.what() << '\n';
    return 2;
  } catch (const error& e) {
    err << "dspan: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace dspan
