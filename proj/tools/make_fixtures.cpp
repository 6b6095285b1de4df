// Regenerates the oracle fixture file used by the golden tests:
//   make_fixtures <path>
// erf at the 17 published table points plus a few off-table points, one
// record per line.

#include <complex>
#include <iostream>
#include <vector>

#include "faddeeva/analysis.hpp"
#include "faddeeva/oracle.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: " << argv[0] << " <fixture-file>\n";
    return 2;
  }
  using namespace faddeeva;
  std::vector<std::complex<double>> points;
  for (const auto& [x, y] : analysis::table_points) points.emplace_back(x, y);
  for (auto z : {std::complex<double>(2.5, 0.3), std::complex<double>(3.0, 3.0),
                 std::complex<double>(0.2, 3.5), std::complex<double>(6.0, 0.5),
                 std::complex<double>(1.5, 1e-3)}) {
    points.push_back(z);
  }
  std::vector<oracle::FixtureRecord> records;
  try {
    for (auto z : points) records.push_back(oracle::erf_fixture(z));
    oracle::write_fixtures(argv[1], records);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  std::cout << "wrote " << records.size() << " records to " << argv[1] << '\n';
  return 0;
}
