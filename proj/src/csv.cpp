#include <cstdio>
#include <fstream>
#include <istream>
#include <iterator>
#include <limits>
#include <ostream>
#include <sstream>

#include "rbu/error.hpp"
#include "rbu/formats.hpp"
#include "text_util.hpp"

namespace rbu {
namespace {

struct Record {
  std::vector<std::string> fields;
  std::size_t line = 0;
};

std::vector<Record> read_records(std::string_view text) {
  std::vector<Record> records;
  Record current;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  std::size_t line = 1;
  current.line = 1;

  auto end_field = [&] {
    current.fields.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    const bool blank = current.fields.size() == 1 && detail::trim(current.fields[0]).empty();
    if (!blank) {
      records.push_back(std::move(current));
    }
    current = Record{};
    current.line = line;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') {
          ++line;
        }
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (field_started && !detail::trim(field).empty()) {
          throw ParseError("unexpected quote inside unquoted field", line);
        }
        field.clear();
        quoted = true;
        field_started = true;
        break;
      case ',':
        end_field();
        break;
      case '\r':
        break;
      case '\n':
        ++line;
        end_record();
        break;
      default:
        field += c;
        field_started = true;
    }
  }
  if (quoted) {
    throw ParseError("unterminated quoted field", line);
  }
  if (field_started || !current.fields.empty()) {
    end_record();
  }
  return records;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos && detail::trim(s) == s) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') {
      out += '"';
    }
    out += c;
  }
  return out + '"';
}

}  // namespace

Dataset parse_csv(std::string_view text, const LabelColumn& label, std::string name) {
  const auto records = read_records(text);
  if (records.empty()) {
    throw ParseError("empty CSV input: missing header row", 1);
  }
  const auto& header = records.front().fields;
  const std::size_t width = header.size();
  if (records.size() == 1) {
    throw ParseError("no data rows", records.front().line);
  }

  std::size_t label_index = width - 1;
  if (const auto* by_name = std::get_if<std::string>(&label)) {
    std::size_t i = 0;
    while (i < width && std::string(detail::trim(header[i])) != *by_name) {
      ++i;
    }
    if (i == width) {
      throw ParseError("label column '" + *by_name + "' not found in header", records.front().line);
    }
    label_index = i;
  } else if (const auto* by_index = std::get_if<std::size_t>(&label)) {
    if (*by_index >= width) {
      throw ParseError("label column index " + std::to_string(*by_index) + " out of range",
                       records.front().line);
    }
    label_index = *by_index;
  }
  if (width < 2) {
    throw ParseError("need at least one feature column and a label column", records.front().line);
  }

  std::vector<std::vector<std::string>> cells(width);
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.fields.size() != width) {
      throw ParseError("row has " + std::to_string(rec.fields.size()) + " fields, header has " +
                           std::to_string(width),
                       rec.line);
    }
    for (std::size_t c = 0; c < width; ++c) {
      const auto value = detail::trim(rec.fields[c]);
      if (value.empty() || value == "?") {
        throw ParseError("missing value in column '" + std::string(detail::trim(header[c])) + "'",
                         rec.line);
      }
      cells[c].emplace_back(value);
    }
  }

  const std::size_t n = records.size() - 1;
  Dataset d;
  d.name = std::move(name);
  d.label_name = std::string(detail::trim(header[label_index]));
  d.labels = std::move(cells[label_index]);
  std::vector<std::size_t> feature_cols;
  for (std::size_t c = 0; c < width; ++c) {
    if (c != label_index) {
      feature_cols.push_back(c);
    }
  }
  d.features = Matrix(n, feature_cols.size(), std::numeric_limits<double>::quiet_NaN());
  for (std::size_t f = 0; f < feature_cols.size(); ++f) {
    auto& column = cells[feature_cols[f]];
    FeatureMeta meta;
    meta.name = std::string(detail::trim(header[feature_cols[f]]));
    std::vector<double> values;
    values.reserve(n);
    for (const auto& v : column) {
      const auto parsed = detail::parse_double(v);
      if (!parsed) {
        break;
      }
      values.push_back(*parsed);
    }
    if (values.size() == n) {
      for (std::size_t r = 0; r < n; ++r) {
        d.features(r, f) = values[r];
      }
    } else {
      meta.kind = FeatureKind::categorical;
      meta.raw = std::move(column);
    }
    d.feature_meta.push_back(std::move(meta));
  }
  return d;
}

Dataset parse_csv(std::istream& in, const LabelColumn& label, std::string name) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_csv(std::string_view(text), label, std::move(name));
}

void write_csv(std::ostream& out, const Dataset& d) {
  validate(d);
  for (const auto& meta : d.feature_meta) {
    out << csv_escape(meta.name) << ',';
  }
  out << csv_escape(d.label_name) << '\n';
  for (std::size_t r = 0; r < d.size(); ++r) {
    for (std::size_t f = 0; f < d.num_features(); ++f) {
      const auto& meta = d.feature_meta[f];
      out << (meta.encoded() ? format_number(d.features(r, f)) : csv_escape(meta.raw[r])) << ',';
    }
    out << csv_escape(d.labels[r]) << '\n';
  }
}

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

Format parse_format(std::string_view name) {
  const auto n = detail::lower(name);
  if (n == "keel" || n == "dat") {
    return Format::keel;
  }
  if (n == "csv") {
    return Format::csv;
  }
  if (n == "auto") {
    return Format::automatic;
  }
  throw ParameterError("unknown format '" + std::string(name) + "' (expected keel, csv or auto)");
}

Format detect_format(const std::filesystem::path& path) {
  const auto ext = detail::lower(path.extension().string());
  if (ext == ".dat") {
    return Format::keel;
  }
  if (ext == ".csv") {
    return Format::csv;
  }
  throw ParameterError("cannot infer format of '" + path.string() + "'; pass --format");
}

Dataset load_dataset(const std::filesystem::path& path, Format format, const LabelColumn& label) {
  if (format == Format::automatic) {
    format = detect_format(path);
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path.string() + "'");
  }
  const auto stem = path.stem().string();
  if (format == Format::keel) {
    auto d = parse_keel(in, stem);
    d.name = stem;
    return d;
  }
  return parse_csv(in, label, stem);
}

void save_dataset(const std::filesystem::path& path, const Dataset& d, Format format) {
  if (format == Format::automatic) {
    format = detect_format(path);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot write '" + path.string() + "'");
  }
  if (format == Format::keel) {
    write_keel(out, d);
  } else {
    write_csv(out, d);
  }
  if (!out) {
    throw IoError("write to '" + path.string() + "' failed");
  }
}

}  // namespace rbu
