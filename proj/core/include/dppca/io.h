//
// Copyright 2026 The dppca Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef DPPCA_IO_H_
#define DPPCA_IO_H_

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <iosfwd>
#include <nlohmann/json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "dppca/dataset.h"

namespace dppca {

// Result of parsing a CSV table. `header` is empty when the first line was
// numeric.
struct CsvTable {
  std::vector<std::string> header;
  Eigen::MatrixXd values;
};

// Comma separated, dot decimal separator, independent of the global locale.
// A first line containing any non-numeric field is treated as a header.
// Blank lines are ignored. Throws kParseError on ragged rows or bad numbers
// and kEmptyDataset when no data rows remain.
CsvTable ParseCsv(std::istream& in);
CsvTable ReadCsvFile(const std::string& path);
Dataset ReadDatasetCsv(const std::string& path);

// Shortest decimal representation that round-trips the double exactly.
std::string FormatDouble(double value);

void WriteCsv(std::ostream& out, const Eigen::MatrixXd& values,
              const std::vector<std::string>& header = {});
void WriteCsvFile(const std::string& path, const Eigen::MatrixXd& values,
                  const std::vector<std::string>& header = {});

// Row-major nested array [[row0...], [row1...], ...].
nlohmann::json MatrixToJson(const Eigen::MatrixXd& values);
Eigen::MatrixXd MatrixFromJson(const nlohmann::json& rows);
nlohmann::json VectorToJson(const Eigen::VectorXd& values);

// Binary frame layout (all little-endian):
//   bytes 0..7   magic "DPPCAFRM"
//   bytes 8..11  p (uint32)
//   bytes 12..15 k (uint32)
//   then p*k float64 values, column-major.
inline constexpr std::array<char, 8> kFrameMagic = {'D', 'P', 'P', 'C',
                                                    'A', 'F', 'R', 'M'};
std::vector<std::uint8_t> EncodeFrameBinary(const Eigen::MatrixXd& frame);
Eigen::MatrixXd DecodeFrameBinary(const std::vector<std::uint8_t>& bytes);
void WriteFrameBinaryFile(const std::string& path,
                          const Eigen::MatrixXd& frame);

// Truncates `path` and writes `contents` verbatim.
void WriteTextFile(const std::string& path, std::string_view contents);

}  // namespace dppca

#endif  // DPPCA_IO_H_
