#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "nng/meta_state.hpp"
#include "nng/units.hpp"

namespace nng::runner {

/// CSV with a header row and shortest round-trip decimal floats.
class CsvWriter {
public:
    CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& columns);
    void row(const std::vector<double>& values);

private:
    std::ofstream out_;
    std::size_t columns_;
};

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& column_data);

void write_text(const std::filesystem::path& path, const std::string& text);

/// Field dump: `<base>.bin` holds n*n complex values as little-endian
/// float64 pairs (re, im), row-major with the physical coordinate x as the
/// row index and the hidden coordinate x~ as the column index.
/// `<base>.json` carries format, n, x_min, x_max, dx, time and units mode.
/// Returns the two written paths.
std::vector<std::filesystem::path> write_field_dump(const std::filesystem::path& base,
                                                    const MetaState& state, UnitMode mode);
MetaState read_field_dump(const std::filesystem::path& base);

std::string sha256_file(const std::filesystem::path& path);

} // namespace nng::runner
