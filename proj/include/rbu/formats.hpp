#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "rbu/dataset.hpp"

namespace rbu {

// Reads a KEEL `.dat` file: `@relation`, `@attribute` declarations
// (`real`/`integer`/`numeric` with an optional `[lo, hi]` range, or a `{a, b}`
// category set), optional `@inputs`/`@outputs`, then `@data` rows. The output
// attribute is the single `@outputs` entry, or the last attribute when absent.
// Errors are ParseError carrying the offending line number.
Dataset parse_keel(std::istream& in, std::string name = {});
Dataset parse_keel(std::string_view text, std::string name = {});

// Label column selector for CSV input: a header name or a 0-based index.
// The default selects the last column.
using LabelColumn = std::variant<std::monostate, std::string, std::size_t>;

// RFC-4180 CSV with a header row. Columns whose every cell parses as a finite
// number become numeric features; the rest are categorical. Empty cells and
// `?` are missing values and rejected.
Dataset parse_csv(std::istream& in, const LabelColumn& label = {}, std::string name = {});
Dataset parse_csv(std::string_view text, const LabelColumn& label = {}, std::string name = {});

// Both writers print numbers with 17 significant digits so that re-parsing
// reproduces every double exactly.
void write_csv(std::ostream& out, const Dataset& d);
void write_keel(std::ostream& out, const Dataset& d);

std::string format_number(double value);

enum class Format { keel, csv, automatic };

Format parse_format(std::string_view name);
// `.dat` -> KEEL, `.csv` -> CSV; throws ParameterError for anything else.
Format detect_format(const std::filesystem::path& path);

Dataset load_dataset(const std::filesystem::path& path, Format format = Format::automatic,
                     const LabelColumn& label = {});
void save_dataset(const std::filesystem::path& path, const Dataset& d, Format format);

}  // namespace rbu
