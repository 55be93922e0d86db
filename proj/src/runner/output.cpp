#include "nng/runner/output.hpp"

#include <openssl/evp.h>

#include <array>
#include <bit>
#include <cstring>
#include <iomanip>
#include <json.hpp>
#include <memory>
#include <sstream>

#include "nng/errors.hpp"
#include "nng/runner/config.hpp"

namespace nng::runner {

static_assert(std::endian::native == std::endian::little, "field dumps assume a little-endian host");

namespace {

std::ofstream open_out(const std::filesystem::path& path, std::ios::openmode mode = std::ios::out) {
    std::ofstream out(path, mode | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    return out;
}

std::filesystem::path with_suffix(const std::filesystem::path& base, const char* suffix) {
    return std::filesystem::path(base.string() + suffix);
}

} // namespace

CsvWriter::CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& columns)
    : out_(open_out(path)), columns_(columns.size()) {
    for (std::size_t i = 0; i < columns.size(); ++i) out_ << (i ? "," : "") << columns[i];
    out_ << '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
    if (values.size() != columns_) throw IoError("CSV row width does not match header");
    for (std::size_t i = 0; i < values.size(); ++i) out_ << (i ? "," : "") << format_double(values[i]);
    out_ << '\n';
    if (!out_) throw IoError("CSV write failed");
}

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& column_data) {
    CsvWriter csv(path, columns);
    const std::size_t rows = column_data.empty() ? 0 : column_data.front().size();
    std::vector<double> row(columns.size());
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c) row[c] = column_data[c][r];
        csv.row(row);
    }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    auto out = open_out(path);
    out << text;
    if (!out) throw IoError("write failed: " + path.string());
}

std::vector<std::filesystem::path> write_field_dump(const std::filesystem::path& base,
                                                    const MetaState& state, UnitMode mode) {
    const auto bin = with_suffix(base, ".bin");
    const auto meta = with_suffix(base, ".json");
    {
        auto out = open_out(bin, std::ios::binary);
        const auto& field = state.amplitudes();
        out.write(reinterpret_cast<const char*>(field.data()),
                  static_cast<std::streamsize>(field.size() * sizeof(cplx)));
        if (!out) throw IoError("write failed: " + bin.string());
    }
    const Grid1D& g = state.grid();
    nlohmann::ordered_json j;
    j["format"] = "complex128-le-rowmajor";
    j["rows"] = "x";
    j["cols"] = "x_hidden";
    j["n"] = g.n();
    j["x_min"] = g.x_min();
    j["x_max"] = g.x_max();
    j["dx"] = g.dx();
    j["time"] = state.time();
    j["units"] = mode == UnitMode::si ? "si" : "dimensionless";
    write_text(meta, j.dump(2) + "\n");
    return {bin, meta};
}

MetaState read_field_dump(const std::filesystem::path& base) {
    std::ifstream meta_in(with_suffix(base, ".json"));
    if (!meta_in) throw IoError("cannot read " + with_suffix(base, ".json").string());
    const auto j = nlohmann::json::parse(meta_in);
    if (j.at("format") != "complex128-le-rowmajor") throw IoError("unsupported field dump format");
    const Grid1D grid(j.at("x_min").get<double>(), j.at("x_max").get<double>(), j.at("n").get<std::size_t>());
    ComplexField field(grid.n());
    std::ifstream in(with_suffix(base, ".bin"), std::ios::binary);
    in.read(reinterpret_cast<char*>(field.data()), static_cast<std::streamsize>(field.size() * sizeof(cplx)));
    if (!in) throw IoError("truncated field dump " + with_suffix(base, ".bin").string());
    return MetaState(grid, std::move(field), j.at("time").get<double>());
}

std::string sha256_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
    EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr);
    std::array<char, 1 << 16> buffer{};
    while (in) {
        in.read(buffer.data(), buffer.size());
        EVP_DigestUpdate(ctx.get(), buffer.data(), static_cast<std::size_t>(in.gcount()));
    }
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx.get(), digest.data(), &len);
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return hex.str();
}

} // namespace nng::runner
