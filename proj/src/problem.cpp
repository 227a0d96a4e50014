#include "nfw/problem.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <utility>

namespace nfw {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string_view trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// Split on any run of spaces and/or commas.
std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!cur.empty()) out.push_back(std::exchange(cur, {}));
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

Int parse_int_at(std::string_view s, int line, int column) {
  Int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ProblemParseError("expected an integer", line, column);
  }
  return value;
}

struct RawLine {
  int number = 0;        // 1-based
  std::string text;      // without trailing newline/carriage return
  std::string key;
  size_t value_offset = 0;  // 0-based index of the value start in `text`
  std::string value;        // trimmed value
};

}  // namespace

std::string_view mode_name(ProblemMode m) {
  switch (m) {
    case ProblemMode::Germ: return "germ";
    case ProblemMode::Laurent: return "laurent";
    case ProblemMode::Partials: return "partials";
  }
  return "?";
}

Polynomial partial_derivative(const Polynomial& p, int i) {
  if (i < 0 || i >= p.nvars()) throw std::invalid_argument("partial_derivative: variable index out of range");
  Polynomial d(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[static_cast<size_t>(i)] == 0) continue;
    Exponent down = e;
    const Int power = down[static_cast<size_t>(i)];
    down[static_cast<size_t>(i)] = power - 1;
    d.add_term(down, c * Rational(power));
  }
  return d;
}

ProblemFile parse_problem_file(const std::string& text) {
  // Pass 1: split into key/value lines.
  std::vector<RawLine> lines;
  {
    int number = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
      const size_t nl = text.find('\n', pos);
      std::string line = text.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      ++number;
      pos = (nl == std::string::npos) ? text.size() + 1 : nl + 1;

      const std::string_view body = trim(line);
      if (body.empty() || body.front() == '#') continue;
      const size_t colon = line.find(':');
      if (colon == std::string::npos) {
        throw ProblemParseError("expected 'key: value'", number, 1);
      }
      RawLine rl;
      rl.number = number;
      rl.text = line;
      rl.key = std::string(trim(std::string_view(line).substr(0, colon)));
      if (rl.key.empty()) throw ProblemParseError("empty key before ':'", number, 1);
      std::string_view rest = std::string_view(line).substr(colon + 1);
      const std::string_view val = trim(rest);
      rl.value_offset = val.empty() ? colon + 1 : static_cast<size_t>(val.data() - line.data());
      rl.value = std::string(val);
      lines.push_back(std::move(rl));
    }
  }

  ProblemFile pf;
  bool saw_vars = false, saw_mode = false, saw_window = false, saw_minimal = false;
  bool saw_checks = false, saw_fan_dump = false;
  std::map<int, std::pair<Polynomial, int>> g_by_index;  // index -> (poly, line)
  std::optional<int> f_line;

  const auto value_column = [](const RawLine& rl) { return static_cast<int>(rl.value_offset) + 1; };

  const auto parse_poly_value = [&](const RawLine& rl) -> Polynomial {
    if (!saw_vars) {
      throw ProblemParseError("vars must be declared before any polynomial", rl.number, 1);
    }
    if (rl.value.empty()) throw ProblemParseError("empty polynomial", rl.number, value_column(rl));
    try {
      return parse_polynomial(rl.value, pf.vars);
    } catch (const ParseError& e) {
      // e.position indexes into rl.value, which starts at rl.value_offset.
      const std::string msg = e.what();
      const std::string clean = msg.substr(0, msg.find(" (at position"));
      throw ProblemParseError(clean, rl.number,
                              static_cast<int>(rl.value_offset + e.position) + 1);
    }
  };

  for (const RawLine& rl : lines) {
    const std::string& key = rl.key;
    if (key == "vars") {
      if (saw_vars) throw ProblemParseError("duplicate key 'vars'", rl.number, 1);
      saw_vars = true;
      pf.vars = split_list(rl.value);
      if (pf.vars.empty()) throw ProblemParseError("vars: at least one variable required", rl.number, value_column(rl));
      for (const std::string& v : pf.vars) {
        if (!is_ident_start(v.front()) || !std::all_of(v.begin(), v.end(), is_ident_char)) {
          throw ProblemParseError("vars: invalid variable name '" + v + "'", rl.number, value_column(rl));
        }
      }
      for (size_t i = 0; i < pf.vars.size(); ++i)
        for (size_t j = i + 1; j < pf.vars.size(); ++j)
          if (pf.vars[i] == pf.vars[j]) {
            throw ProblemParseError("vars: duplicate variable '" + pf.vars[i] + "'", rl.number, value_column(rl));
          }
    } else if (key == "mode") {
      if (saw_mode) throw ProblemParseError("duplicate key 'mode'", rl.number, 1);
      saw_mode = true;
      if (rl.value == "germ") pf.mode = ProblemMode::Germ;
      else if (rl.value == "laurent") pf.mode = ProblemMode::Laurent;
      else if (rl.value == "partials") pf.mode = ProblemMode::Partials;
      else throw ProblemParseError("mode must be germ, laurent or partials", rl.number, value_column(rl));
    } else if (key == "f") {
      if (f_line) throw ProblemParseError("duplicate key 'f'", rl.number, 1);
      f_line = rl.number;
      pf.f = parse_poly_value(rl);
    } else if (key.size() >= 2 && key[0] == 'g' &&
               std::all_of(key.begin() + 1, key.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; })) {
      const Int idx = parse_int_at(std::string_view(key).substr(1), rl.number, 1);
      if (idx < 1 || idx > 32) throw ProblemParseError("generator index out of range (1..32)", rl.number, 1);
      if (g_by_index.count(static_cast<int>(idx))) {
        throw ProblemParseError("duplicate key '" + key + "'", rl.number, 1);
      }
      g_by_index.emplace(static_cast<int>(idx), std::make_pair(parse_poly_value(rl), rl.number));
    } else if (key == "window") {
      if (saw_window) throw ProblemParseError("duplicate key 'window'", rl.number, 1);
      saw_window = true;
      const size_t dots = rl.value.find("..");
      if (dots == std::string::npos) {
        throw ProblemParseError("window must be LO..HI", rl.number, value_column(rl));
      }
      const std::string_view lo_s = trim(std::string_view(rl.value).substr(0, dots));
      const std::string_view hi_s = trim(std::string_view(rl.value).substr(dots + 2));
      pf.window_lo = parse_int_at(lo_s, rl.number, value_column(rl));
      pf.window_hi = parse_int_at(hi_s, rl.number, value_column(rl));
      if (*pf.window_lo > *pf.window_hi) {
        throw ProblemParseError("window: LO must not exceed HI", rl.number, value_column(rl));
      }
    } else if (key == "minimal-M") {
      if (saw_minimal) throw ProblemParseError("duplicate key 'minimal-M'", rl.number, 1);
      saw_minimal = true;
      if (rl.value == "true") pf.minimal_m = true;
      else if (rl.value == "false") pf.minimal_m = false;
      else throw ProblemParseError("minimal-M must be true or false", rl.number, value_column(rl));
    } else if (key == "checks") {
      if (saw_checks) throw ProblemParseError("duplicate key 'checks'", rl.number, 1);
      saw_checks = true;
      pf.checks = split_list(rl.value);
      if (pf.checks.empty()) throw ProblemParseError("checks: at least one name required", rl.number, value_column(rl));
    } else if (key == "fan-dump") {
      if (saw_fan_dump) throw ProblemParseError("duplicate key 'fan-dump'", rl.number, 1);
      saw_fan_dump = true;
      if (rl.value.empty()) throw ProblemParseError("fan-dump: path required", rl.number, value_column(rl));
      pf.fan_dump = rl.value;
    } else {
      throw ProblemParseError("unknown key '" + key + "'", rl.number, 1);
    }
  }

  if (!saw_vars) throw ProblemParseError("missing required key 'vars'", 1, 1);

  if (pf.mode == ProblemMode::Partials) {
    if (!pf.f) throw ProblemParseError("partials mode requires 'f'", 1, 1);
    if (!g_by_index.empty()) {
      throw ProblemParseError("partials mode takes 'f' only, not g1..gk",
                              g_by_index.begin()->second.second, 1);
    }
    if (pf.f->is_zero()) throw ProblemParseError("f must be nonzero", *f_line, 1);
    for (int i = 0; i < pf.n(); ++i) {
      Polynomial d = partial_derivative(*pf.f, i);
      if (d.is_zero()) {
        throw ProblemParseError("partial derivative with respect to '" + pf.vars[static_cast<size_t>(i)] +
                                    "' is zero; partials mode needs all of them nonzero",
                                *f_line, 1);
      }
      pf.gs.push_back(std::move(d));
    }
  } else {
    if (pf.f) throw ProblemParseError("'f' is only valid in partials mode", *f_line, 1);
    if (g_by_index.empty()) throw ProblemParseError("at least one generator g1 required", 1, 1);
    int expected = 1;
    for (const auto& [idx, entry] : g_by_index) {
      if (idx != expected) {
        throw ProblemParseError("generator indices must be consecutive from g1 (missing g" +
                                    std::to_string(expected) + ")",
                                entry.second, 1);
      }
      if (entry.first.is_zero()) {
        throw ProblemParseError("generator g" + std::to_string(idx) + " must be nonzero", entry.second, 1);
      }
      pf.gs.push_back(entry.first);
      ++expected;
    }
  }

  return pf;
}

}  // namespace nfw
