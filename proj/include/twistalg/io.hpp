#pragma once

#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "twistalg/algebra.hpp"
#include "twistalg/error.hpp"
#include "twistalg/group.hpp"
#include "twistalg/twist.hpp"

namespace twistalg {

using json = nlohmann::json;

/// Shortest decimal text that reads back to the same double.
inline std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

// ---------------------------------------------------------------------------
// Element text format: terms such as `1 - 2*i3 + 0.5*i5`.

namespace detail {

class TermScanner {
 public:
  explicit TermScanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  GroupElement index() {
    skip_space();
    GroupElement v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (ec != std::errc{}) fail("expected a basis index");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return v;
  }

  double number() {
    skip_space();
    double v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (ec != std::errc{}) fail("expected a number");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return v;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::MalformedElement, "'" + std::string(text_) + "' at offset " +
                                                 std::to_string(pos_) + ": " + why);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the text form into an element of the given dimension. Terms may
/// come in any order; repeated indices are summed.
inline Element parse_element(std::string_view text, std::size_t dimension) {
  detail::TermScanner in(text);
  auto x = Element::zero(dimension);
  if (in.done()) in.fail("empty element");
  bool first = true;
  while (!in.done()) {
    double sign = 1.0;
    if (in.accept('+')) {
    } else if (in.accept('-')) {
      sign = -1.0;
    } else if (!first) {
      in.fail("expected '+' or '-' between terms");
    }
    first = false;

    double coeff = 1.0;
    GroupElement index = 0;
    if (in.accept('i')) {
      index = in.index();
    } else {
      coeff = in.number();
      if (in.accept('*')) {
        if (!in.accept('i')) in.fail("expected 'i' after '*'");
        index = in.index();
      }
    }
    if (index >= dimension) {
      throw Error(ErrorCode::DimensionMismatch, "i" + std::to_string(index) +
                                                    " is outside an algebra of dimension " +
                                                    std::to_string(dimension));
    }
    x[index] += sign * coeff;
  }
  return Element(x.coeffs());
}

template <Scalar T>
std::string format_element(const BasicElement<T>& x) {
  std::string out;
  for (std::size_t p = 0; p < x.size(); ++p) {
    const double c = static_cast<double>(x[p]);
    if (c == 0.0) continue;
    const double mag = std::abs(c);
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (p == 0) {
      out += format_number(mag);
    } else {
      if (mag != 1.0) out += format_number(mag) + "*";
      out += "i" + std::to_string(p);
    }
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Element JSON: {"n": int, "coeffs": [...]}

template <Scalar T>
json element_to_json(const BasicElement<T>& x) {
  const int n = x.exponent();
  if (n < 0) throw Error(ErrorCode::DimensionMismatch, "JSON elements need a dyadic size");
  return json{{"n", n}, {"coeffs", x.coeffs()}};
}

inline Element element_from_json(const json& j) {
  try {
    const auto n = j.at("n").get<unsigned>();
    auto coeffs = j.at("coeffs").get<std::vector<double>>();
    require_exponent(n, kMaxExponent, "element");
    if (coeffs.size() != dyadic_order(n)) {
      throw Error(ErrorCode::MalformedElement, "coeffs length " + std::to_string(coeffs.size()) +
                                                   " does not equal 2^" + std::to_string(n));
    }
    return Element(std::move(coeffs));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedElement, e.what());
  }
}

// ---------------------------------------------------------------------------
// CSV helpers

inline std::vector<std::vector<std::string>> read_csv_cells(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      const auto b = cell.find_first_not_of(" \t");
      const auto e = cell.find_last_not_of(" \t");
      cells.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    rows.push_back(std::move(cells));
  }
  return rows;
}

inline long parse_integer_cell(const std::string& cell) {
  std::string_view v = cell;
  if (!v.empty() && v.front() == '+') v.remove_prefix(1);
  long out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size() || v.empty())
    throw Error(ErrorCode::MalformedTable, "bad integer cell '" + cell + "'");
  return out;
}

/// Cayley table as CSV rows of element indices.
inline FiniteGroup read_group_csv(std::istream& in) {
  std::vector<std::vector<GroupElement>> rows;
  for (const auto& cells : read_csv_cells(in)) {
    std::vector<GroupElement> row;
    for (const auto& c : cells) {
      const long v = parse_integer_cell(c);
      if (v < 0) throw Error(ErrorCode::MalformedTable, "negative group element");
      row.push_back(static_cast<GroupElement>(v));
    }
    rows.push_back(std::move(row));
  }
  return FiniteGroup::from_table(std::move(rows));
}

inline void write_group_csv(std::ostream& out, const FiniteGroup& g) {
  for (const auto& row : g.table()) {
    for (std::size_t q = 0; q < row.size(); ++q) out << (q ? "," : "") << row[q];
    out << '\n';
  }
}

// ---------------------------------------------------------------------------
// TwistTable: CSV of +-1 (row p, column q) and JSON {"kind","n","signs"}.

inline void write_twist_csv(std::ostream& out, const TwistTable& t) {
  for (std::size_t p = 0; p < t.order(); ++p) {
    for (std::size_t q = 0; q < t.order(); ++q)
      out << (q ? "," : "") << t(static_cast<GroupElement>(p), static_cast<GroupElement>(q));
    out << '\n';
  }
}

inline TwistTable read_twist_csv(std::istream& in) {
  const auto rows = read_csv_cells(in);
  const auto order = rows.size();
  if (order == 0) throw Error(ErrorCode::MalformedTable, "empty sign table");
  std::vector<std::int8_t> signs;
  signs.reserve(order * order);
  for (const auto& row : rows) {
    if (row.size() != order) throw Error(ErrorCode::MalformedTable, "sign table is not square");
    for (const auto& c : row) {
      const long v = parse_integer_cell(c);
      if (v != 1 && v != -1) throw Error(ErrorCode::MalformedTable, "sign cell must be +1 or -1");
      signs.push_back(static_cast<std::int8_t>(v));
    }
  }
  return TwistTable(TwistKind::Table, order, std::move(signs));
}

inline json twist_to_json(const TwistTable& t) {
  std::vector<std::vector<int>> rows(t.order(), std::vector<int>(t.order()));
  for (std::size_t p = 0; p < t.order(); ++p)
    for (std::size_t q = 0; q < t.order(); ++q)
      rows[p][q] = t(static_cast<GroupElement>(p), static_cast<GroupElement>(q));
  json j{{"kind", std::string(to_string(t.kind()))}, {"signs", rows}};
  if (t.exponent() >= 0)
    j["n"] = t.exponent();
  else
    j["order"] = t.order();
  return j;
}

inline TwistTable twist_from_json(const json& j) {
  try {
    const auto kind_name = j.at("kind").get<std::string>();
    const auto kind = parse_twist_kind(kind_name);
    if (!kind) throw Error(ErrorCode::MalformedTable, "unknown twist kind '" + kind_name + "'");
    const auto rows = j.at("signs").get<std::vector<std::vector<int>>>();
    const auto order = rows.size();
    if (j.contains("n") && dyadic_order(j.at("n").get<unsigned>()) != order)
      throw Error(ErrorCode::MalformedTable, "\"n\" does not match the sign matrix size");
    std::vector<std::int8_t> signs;
    for (const auto& row : rows) {
      if (row.size() != order) throw Error(ErrorCode::MalformedTable, "sign table is not square");
      for (int v : row) {
        if (v != 1 && v != -1) throw Error(ErrorCode::MalformedTable, "sign must be +1 or -1");
        signs.push_back(static_cast<std::int8_t>(v));
      }
    }
    return TwistTable(*kind, order, std::move(signs));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedTable, e.what());
  }
}

// ---------------------------------------------------------------------------
// Multiplication tables: cell "+k" / "-k" means +-i_k, row = left factor.

struct MulTable {
  std::string kind;
  std::size_t order = 0;
  std::vector<std::vector<long>> cells;  // signed index; sign carried separately for k = 0
  std::vector<std::vector<Sign>> signs;

  friend bool operator==(const MulTable&, const MulTable&) = default;
};

inline MulTable mul_table(const AlgebraContext& ctx) {
  MulTable t;
  t.kind = std::string(ctx.twist().name());
  t.order = ctx.dimension();
  t.cells.assign(t.order, std::vector<long>(t.order));
  t.signs.assign(t.order, std::vector<Sign>(t.order));
  for (GroupElement p = 0; p < t.order; ++p)
    for (GroupElement q = 0; q < t.order; ++q) {
      t.cells[p][q] = static_cast<long>(ctx.group().op(p, q));
      t.signs[p][q] = ctx.sign(p, q);
    }
  return t;
}

inline std::string format_mul_cell(Sign s, long index) {
  return (s < 0 ? "-" : "+") + std::to_string(index);
}

inline std::pair<Sign, long> parse_mul_cell(std::string_view cell) {
  if (cell.size() < 2 || (cell.front() != '+' && cell.front() != '-'))
    throw Error(ErrorCode::MalformedTable, "cell '" + std::string(cell) + "' must look like +k or -k");
  const Sign s = cell.front() == '-' ? -1 : 1;
  long index = 0;
  auto [ptr, ec] = std::from_chars(cell.data() + 1, cell.data() + cell.size(), index);
  if (ec != std::errc{} || ptr != cell.data() + cell.size() || index < 0)
    throw Error(ErrorCode::MalformedTable, "bad cell '" + std::string(cell) + "'");
  return {s, index};
}

inline void write_mul_table_csv(std::ostream& out, const MulTable& t) {
  for (std::size_t p = 0; p < t.order; ++p) {
    for (std::size_t q = 0; q < t.order; ++q)
      out << (q ? "," : "") << format_mul_cell(t.signs[p][q], t.cells[p][q]);
    out << '\n';
  }
}

inline json mul_table_to_json(const MulTable& t) {
  std::vector<std::vector<std::string>> rows(t.order, std::vector<std::string>(t.order));
  for (std::size_t p = 0; p < t.order; ++p)
    for (std::size_t q = 0; q < t.order; ++q) rows[p][q] = format_mul_cell(t.signs[p][q], t.cells[p][q]);
  return json{{"kind", t.kind}, {"order", t.order}, {"cells", rows}};
}

inline MulTable mul_table_from_json(const json& j) {
  try {
    MulTable t;
    t.kind = j.at("kind").get<std::string>();
    t.order = j.at("order").get<std::size_t>();
    const auto rows = j.at("cells").get<std::vector<std::vector<std::string>>>();
    if (rows.size() != t.order) throw Error(ErrorCode::MalformedTable, "row count differs from order");
    for (const auto& row : rows) {
      if (row.size() != t.order) throw Error(ErrorCode::MalformedTable, "table is not square");
      auto& cells = t.cells.emplace_back();
      auto& signs = t.signs.emplace_back();
      for (const auto& c : row) {
        auto [s, k] = parse_mul_cell(c);
        cells.push_back(k);
        signs.push_back(s);
      }
    }
    return t;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedTable, e.what());
  }
}

// ---------------------------------------------------------------------------
// Property reports

inline constexpr std::array kAllProperties = {Property::Identive, Property::Positive,
                                              Property::Invertive, Property::Associative,
                                              Property::Proper};

inline json report_to_json(const PropertyReport& r) {
  json props = json::object();
  for (auto p : kAllProperties) {
    const auto& check = r.get(p);
    props[std::string(to_string(p))] = json{{"holds", check.holds}, {"witness", check.witness}};
  }
  return json{{"twist", r.twist}, {"order", r.order}, {"properties", props}};
}

inline PropertyReport report_from_json(const json& j) {
  try {
    PropertyReport r;
    r.twist = j.at("twist").get<std::string>();
    r.order = j.at("order").get<std::size_t>();
    const auto& props = j.at("properties");
    auto read = [&](Property p) {
      const auto& entry = props.at(std::string(to_string(p)));
      return PropertyCheck{entry.at("holds").get<bool>(),
                           entry.at("witness").get<std::vector<GroupElement>>()};
    };
    r.identive = read(Property::Identive);
    r.positive = read(Property::Positive);
    r.invertive = read(Property::Invertive);
    r.associative = read(Property::Associative);
    r.proper = read(Property::Proper);
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedTable, e.what());
  }
}

inline std::string format_report(const PropertyReport& r) {
  std::ostringstream out;
  out << "twist " << r.twist << " on a group of order " << r.order << '\n';
  for (auto p : kAllProperties) {
    const auto& check = r.get(p);
    out << "  " << to_string(p) << ": " << (check.holds ? "yes" : "no");
    if (!check.holds) {
      out << "  (counterexample";
      for (auto w : check.witness) out << ' ' << w;
      out << ')';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace twistalg
