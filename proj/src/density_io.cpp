#include "hw/density_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hw/error.hpp"

namespace hw {

using json = nlohmann::ordered_json;

std::string density_to_json(const DensityMatrix& rho) {
  const ComplexMatrix& m = rho.matrix();
  json entries = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      entries.push_back({m(r, c).real(), m(r, c).imag()});
    }
  }
  json doc = {{"dims", rho.dims()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
  return doc.dump() + "\n";
}

DensityMatrix density_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("density JSON: ") + e.what());
  }
  try {
    const auto dims = doc.at("dims").get<std::vector<int>>();
    const auto rows = doc.at("rows").get<long>();
    const auto cols = doc.at("cols").get<long>();
    const json& entries = doc.at("entries");
    if (rows <= 0 || cols <= 0 || !entries.is_array() ||
        static_cast<long>(entries.size()) != rows * cols) {
      throw ValidationError("density JSON: entry count does not equal rows * cols");
    }
    ComplexMatrix m(rows, cols);
    for (long r = 0; r < rows; ++r) {
      for (long c = 0; c < cols; ++c) {
        const json& e = entries[static_cast<std::size_t>(r * cols + c)];
        if (!e.is_array() || e.size() != 2) {
          throw ValidationError("density JSON: each entry must be [re, im]");
        }
        m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
      }
    }
    return DensityMatrix(std::move(m), dims);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("density JSON: ") + e.what());
  }
}

void write_density_file(const DensityMatrix& rho, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open " + path.string() + " for writing");
  out << density_to_json(rho);
  if (!out) throw ValidationError("failed writing " + path.string());
}

DensityMatrix read_density_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return density_from_json(buf.str());
}

}  // namespace hw
