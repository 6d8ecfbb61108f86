#include <gtest/gtest.h>

#include <filesystem>

#include "hw/density_io.hpp"
#include "hw/error.hpp"
#include "support/generators.hpp"

using namespace hw;

TEST(DensityJson, RoundTripIsExact) {
  proptest::Gen g(1);
  for (int i = 0; i < 20; ++i) {
    const DensityMatrix rho = g.density({2, g.integer(2, 8)});
    const DensityMatrix back = density_from_json(density_to_json(rho));
    EXPECT_EQ(back.dims(), rho.dims());
    EXPECT_EQ(max_abs_diff(back.matrix(), rho.matrix()), 0.0);
  }
}

TEST(DensityJson, Layout) {
  const std::string text = density_to_json(maximally_mixed_qubit());
  EXPECT_EQ(text, "{\"dims\":[2],\"rows\":2,\"cols\":2,\"entries\":[[0.5,0.0],[0.0,0.0],[0.0,0.0],[0.5,0.0]]}\n");
}

TEST(DensityJson, RejectsMalformed) {
  EXPECT_THROW(density_from_json("{"), ValidationError);
  EXPECT_THROW(density_from_json("{\"dims\":[2],\"rows\":2,\"cols\":2,\"entries\":[[1,0]]}"), ValidationError);
  EXPECT_THROW(density_from_json("{\"dims\":[2],\"rows\":2,\"cols\":2,\"entries\":[1,0,0,0]}"), ValidationError);
  EXPECT_THROW(density_from_json("{\"dims\":[2],\"rows\":2,\"cols\":2,\"entries\":[[0.6,0],[0,0],[0,0],[0.6,0]]}"),
               ValidationError);
  EXPECT_THROW(density_from_json("{\"rows\":1,\"cols\":1,\"entries\":[[1,0]]}"), ValidationError);
  EXPECT_THROW(density_from_json("{\"dims\":[2],\"rows\":2,\"cols\":2,\"entries\":[[\"a\",0],[0,0],[0,0],[1,0]]}"),
               ValidationError);
}

TEST(DensityFile, WriteRead) {
  const auto path = std::filesystem::temp_directory_path() / "hw_density_io_test.json";
  const DensityMatrix rho = cat_hybrid(0.7, FockConfig(24));
  write_density_file(rho, path);
  EXPECT_EQ(max_abs_diff(read_density_file(path).matrix(), rho.matrix()), 0.0);
  std::filesystem::remove(path);
  EXPECT_THROW(read_density_file(path), ValidationError);
}
