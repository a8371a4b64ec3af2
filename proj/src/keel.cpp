#include <algorithm>
#include <cctype>
#include <cmath>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "rbu/error.hpp"
#include "rbu/formats.hpp"
#include "text_util.hpp"

namespace rbu {
namespace {

struct Attribute {
  std::string name;
  bool categorical = false;
  std::vector<std::string> declared;
};

// Splits "name rest" where name may be quoted.
std::pair<std::string, std::string_view> take_name(std::string_view s, std::size_t line) {
  s = detail::trim(s);
  if (s.empty()) {
    throw ParseError("attribute declaration without a name", line);
  }
  if (s.front() == '\'' || s.front() == '"') {
    const char quote = s.front();
    const auto end = s.find(quote, 1);
    if (end == std::string_view::npos) {
      throw ParseError("unterminated quoted attribute name", line);
    }
    return {std::string(s.substr(1, end - 1)), s.substr(end + 1)};
  }
  std::size_t end = 0;
  while (end < s.size() && !std::isspace(static_cast<unsigned char>(s[end])) && s[end] != '{' &&
         s[end] != '[') {
    ++end;
  }
  return {std::string(s.substr(0, end)), s.substr(end)};
}

Attribute parse_attribute(std::string_view rest, std::size_t line) {
  auto [name, type] = take_name(rest, line);
  type = detail::trim(type);
  Attribute attr;
  attr.name = std::move(name);
  if (type.empty()) {
    throw ParseError("attribute '" + attr.name + "' has no type", line);
  }
  if (type.front() == '{') {
    const auto close = type.find('}');
    if (close == std::string_view::npos) {
      throw ParseError("unterminated category set for attribute '" + attr.name + "'", line);
    }
    attr.categorical = true;
    for (auto token : detail::split(type.substr(1, close - 1), ',')) {
      token = detail::trim(token);
      if (token.empty()) {
        throw ParseError("empty category in attribute '" + attr.name + "'", line);
      }
      attr.declared.emplace_back(token);
    }
    if (!detail::trim(type.substr(close + 1)).empty()) {
      throw ParseError("unexpected text after category set", line);
    }
    return attr;
  }
  std::size_t end = 0;
  while (end < type.size() && std::isalpha(static_cast<unsigned char>(type[end]))) {
    ++end;
  }
  const std::string keyword = detail::lower(type.substr(0, end));
  if (keyword != "real" && keyword != "integer" && keyword != "numeric") {
    throw ParseError("unknown attribute type '" + std::string(type.substr(0, end)) + "'", line);
  }
  auto range = detail::trim(type.substr(end));
  if (!range.empty()) {
    if (range.front() != '[' || range.back() != ']') {
      throw ParseError("malformed range for attribute '" + attr.name + "'", line);
    }
    const auto bounds = detail::split(range.substr(1, range.size() - 2), ',');
    if (bounds.size() != 2 || !detail::parse_double(detail::trim(bounds[0])) ||
        !detail::parse_double(detail::trim(bounds[1]))) {
      throw ParseError("malformed range for attribute '" + attr.name + "'", line);
    }
  }
  return attr;
}

std::vector<std::string> parse_name_list(std::string_view s) {
  std::vector<std::string> out;
  for (auto token : detail::split(s, ',')) {
    token = detail::trim(token);
    if (token.size() >= 2 && (token.front() == '\'' || token.front() == '"') &&
        token.back() == token.front()) {
      token = token.substr(1, token.size() - 2);
    }
    if (!token.empty()) {
      out.emplace_back(token);
    }
  }
  return out;
}

std::size_t find_attribute(const std::vector<Attribute>& attrs, const std::string& name,
                           std::size_t line) {
  for (std::size_t i = 0; i < attrs.size(); ++i) {
    if (attrs[i].name == name) {
      return i;
    }
  }
  throw ParseError("undeclared attribute '" + name + "'", line);
}

}  // namespace

Dataset parse_keel(std::istream& in, std::string name) {
  std::vector<Attribute> attrs;
  std::optional<std::vector<std::string>> inputs;
  std::optional<std::vector<std::string>> outputs;
  std::string relation;
  bool in_data = false;
  std::size_t line_no = 0;

  Dataset d;
  std::size_t output_index = 0;
  std::vector<std::size_t> feature_attrs;
  std::vector<std::vector<std::string>> raw_columns;

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = detail::trim(line);
    if (text.empty() || text.front() == '%') {
      continue;
    }
    if (!in_data) {
      if (text.front() != '@') {
        throw ParseError("expected a header directive before @data", line_no);
      }
      std::size_t kw_end = 1;
      while (kw_end < text.size() && std::isalpha(static_cast<unsigned char>(text[kw_end]))) {
        ++kw_end;
      }
      const std::string keyword = detail::lower(text.substr(1, kw_end - 1));
      const auto rest = text.substr(kw_end);
      if (keyword == "relation") {
        relation = std::string(detail::trim(rest));
      } else if (keyword == "attribute") {
        attrs.push_back(parse_attribute(rest, line_no));
      } else if (keyword == "inputs" || keyword == "input") {
        inputs = parse_name_list(rest);
      } else if (keyword == "outputs" || keyword == "output") {
        outputs = parse_name_list(rest);
      } else if (keyword == "data") {
        if (attrs.size() < 2) {
          throw ParseError("need at least one input and one output attribute", line_no);
        }
        if (outputs && outputs->size() != 1) {
          throw ParseError("exactly one output attribute is supported", line_no);
        }
        output_index = outputs ? find_attribute(attrs, outputs->front(), line_no) : attrs.size() - 1;
        for (std::size_t i = 0; i < attrs.size(); ++i) {
          if (i == output_index) {
            continue;
          }
          if (inputs && std::find(inputs->begin(), inputs->end(), attrs[i].name) == inputs->end()) {
            continue;
          }
          feature_attrs.push_back(i);
        }
        if (inputs) {
          for (const auto& n : *inputs) {
            find_attribute(attrs, n, line_no);
          }
        }
        for (std::size_t i : feature_attrs) {
          FeatureMeta meta;
          meta.name = attrs[i].name;
          meta.kind = attrs[i].categorical ? FeatureKind::categorical : FeatureKind::numeric;
          d.feature_meta.push_back(std::move(meta));
        }
        raw_columns.resize(feature_attrs.size());
        d.label_name = attrs[output_index].name;
        in_data = true;
      } else {
        throw ParseError("unknown header directive '@" + keyword + "'", line_no);
      }
      continue;
    }

    const auto tokens = detail::split(text, ',');
    if (tokens.size() != attrs.size()) {
      throw ParseError("row has " + std::to_string(tokens.size()) + " values, expected " +
                           std::to_string(attrs.size()),
                       line_no);
    }
    std::vector<double> row(feature_attrs.size(), std::numeric_limits<double>::quiet_NaN());
    for (std::size_t a = 0; a < attrs.size(); ++a) {
      const auto token = detail::trim(tokens[a]);
      if (token.empty() || token == "?" || detail::lower(token) == "<null>") {
        throw ParseError("missing value for attribute '" + attrs[a].name + "'", line_no);
      }
      if (attrs[a].categorical) {
        const auto& decl = attrs[a].declared;
        if (std::find(decl.begin(), decl.end(), token) == decl.end()) {
          throw ParseError("unknown categorical value '" + std::string(token) + "' for attribute '" +
                               attrs[a].name + "'",
                           line_no);
        }
      }
    }
    for (std::size_t f = 0; f < feature_attrs.size(); ++f) {
      const auto& attr = attrs[feature_attrs[f]];
      const auto token = detail::trim(tokens[feature_attrs[f]]);
      if (attr.categorical) {
        raw_columns[f].emplace_back(token);
        continue;
      }
      const auto value = detail::parse_double(token);
      if (!value) {
        throw ParseError("non-numeric value '" + std::string(token) + "' for attribute '" +
                             attr.name + "'",
                         line_no);
      }
      row[f] = *value;
    }
    d.features.append_row(row);
    d.labels.emplace_back(detail::trim(tokens[output_index]));
  }

  if (!in_data) {
    throw ParseError("missing @data section", line_no);
  }
  if (d.labels.empty()) {
    throw ParseError("no data rows", line_no);
  }
  for (std::size_t f = 0; f < d.feature_meta.size(); ++f) {
    if (d.feature_meta[f].kind == FeatureKind::categorical) {
      d.feature_meta[f].raw = std::move(raw_columns[f]);
    }
  }
  d.name = !name.empty() ? std::move(name) : relation;
  return d;
}

Dataset parse_keel(std::string_view text, std::string name) {
  std::istringstream in{std::string(text)};
  return parse_keel(in, std::move(name));
}

void write_keel(std::ostream& out, const Dataset& d) {
  validate(d);
  out << "@relation " << (d.name.empty() ? "dataset" : detail::quote_name(d.name)) << '\n';
  for (const auto& meta : d.feature_meta) {
    out << "@attribute " << detail::quote_name(meta.name) << ' ';
    if (meta.encoded()) {
      out << "real\n";
      continue;
    }
    std::vector<std::string> cats;
    for (const auto& v : meta.raw) {
      if (std::find(cats.begin(), cats.end(), v) == cats.end()) {
        cats.push_back(v);
      }
    }
    out << '{' << detail::join(cats, ", ") << "}\n";
  }
  out << "@attribute " << detail::quote_name(d.label_name) << " {" << detail::join(d.classes(), ", ")
      << "}\n";
  std::vector<std::string> names;
  for (const auto& meta : d.feature_meta) {
    names.push_back(detail::quote_name(meta.name));
  }
  out << "@inputs " << detail::join(names, ", ") << '\n';
  out << "@outputs " << detail::quote_name(d.label_name) << '\n';
  out << "@data\n";
  for (std::size_t r = 0; r < d.size(); ++r) {
    for (std::size_t f = 0; f < d.num_features(); ++f) {
      const auto& meta = d.feature_meta[f];
      out << (meta.encoded() ? format_number(d.features(r, f)) : meta.raw[r]) << ", ";
    }
    out << d.labels[r] << '\n';
  }
}

}  // namespace rbu
