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

#include "dppca/io.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstring>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "dppca/error.h"

namespace dppca {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(Trim(line.substr(start)));
      break;
    }
    fields.push_back(Trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

std::optional<double> ParseNumber(std::string_view field) {
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  if (field.empty()) return std::nullopt;
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    return std::nullopt;
  }
  return value;
}

template <typename T>
void AppendLittleEndian(std::vector<std::uint8_t>& out, T value) {
  std::array<std::uint8_t, sizeof(T)> bytes;
  std::memcpy(bytes.data(), &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) {
    std::reverse(bytes.begin(), bytes.end());
  }
  out.insert(out.end(), bytes.begin(), bytes.end());
}

template <typename T>
T ReadLittleEndian(const std::uint8_t* data) {
  std::array<std::uint8_t, sizeof(T)> bytes;
  std::memcpy(bytes.data(), data, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) {
    std::reverse(bytes.begin(), bytes.end());
  }
  T value;
  std::memcpy(&value, bytes.data(), sizeof(T));
  return value;
}

}  // namespace

CsvTable ParseCsv(std::istream& in) {
  CsvTable table;
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  std::size_t width = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    const auto fields = SplitFields(line);
    std::vector<double> row;
    row.reserve(fields.size());
    bool numeric = true;
    for (const auto field : fields) {
      const auto value = ParseNumber(field);
      if (!value) {
        numeric = false;
        break;
      }
      row.push_back(*value);
    }
    if (!numeric) {
      if (first) {
        for (const auto field : fields) table.header.emplace_back(field);
        width = fields.size();
        first = false;
        continue;
      }
      throw Error(ErrorCode::kParseError,
                  "non-numeric field on line " + std::to_string(line_no));
    }
    if (width == 0) width = row.size();
    if (row.size() != width) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(line_no) + " has " +
                      std::to_string(row.size()) + " fields, expected " +
                      std::to_string(width));
    }
    first = false;
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw Error(ErrorCode::kEmptyDataset, "CSV input has no data rows");
  }
  table.values.resize(static_cast<Eigen::Index>(rows.size()),
                      static_cast<Eigen::Index>(width));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < width; ++j) {
      table.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          rows[i][j];
    }
  }
  return table;
}

CsvTable ReadCsvFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  return ParseCsv(in);
}

Dataset ReadDatasetCsv(const std::string& path) {
  return Dataset(ReadCsvFile(path).values);
}

std::string FormatDouble(double value) {
  std::array<char, 32> buf;
  const auto [ptr, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) {
    throw Error(ErrorCode::kDomainError, "cannot format double");
  }
  return std::string(buf.data(), ptr);
}

void WriteCsv(std::ostream& out, const Eigen::MatrixXd& values,
              const std::vector<std::string>& header) {
  if (!header.empty()) {
    for (std::size_t j = 0; j < header.size(); ++j) {
      if (j > 0) out << ',';
      out << header[j];
    }
    out << '\n';
  }
  for (Eigen::Index i = 0; i < values.rows(); ++i) {
    for (Eigen::Index j = 0; j < values.cols(); ++j) {
      if (j > 0) out << ',';
      out << FormatDouble(values(i, j));
    }
    out << '\n';
  }
}

void WriteCsvFile(const std::string& path, const Eigen::MatrixXd& values,
                  const std::vector<std::string>& header) {
  std::ostringstream out;
  WriteCsv(out, values, header);
  WriteTextFile(path, out.str());
}

nlohmann::json MatrixToJson(const Eigen::MatrixXd& values) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < values.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < values.cols(); ++j)
      row.push_back(values(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd MatrixFromJson(const nlohmann::json& rows) {
  if (!rows.is_array()) {
    throw Error(ErrorCode::kParseError, "matrix JSON must be an array of rows");
  }
  const auto n = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index p = n == 0 ? 0 : static_cast<Eigen::Index>(rows[0].size());
  Eigen::MatrixXd out(n, p);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != p) {
      throw Error(ErrorCode::kParseError, "ragged matrix JSON");
    }
    for (Eigen::Index j = 0; j < p; ++j) {
      out(i, j) = row[static_cast<std::size_t>(j)].get<double>();
    }
  }
  return out;
}

nlohmann::json VectorToJson(const Eigen::VectorXd& values) {
  return nlohmann::json(
      std::vector<double>(values.data(), values.data() + values.size()));
}

std::vector<std::uint8_t> EncodeFrameBinary(const Eigen::MatrixXd& frame) {
  std::vector<std::uint8_t> out(kFrameMagic.begin(), kFrameMagic.end());
  out.reserve(16 + 8 * static_cast<std::size_t>(frame.size()));
  AppendLittleEndian<std::uint32_t>(out,
                                    static_cast<std::uint32_t>(frame.rows()));
  AppendLittleEndian<std::uint32_t>(out,
                                    static_cast<std::uint32_t>(frame.cols()));
  for (Eigen::Index j = 0; j < frame.cols(); ++j) {
    for (Eigen::Index i = 0; i < frame.rows(); ++i) {
      AppendLittleEndian<double>(out, frame(i, j));
    }
  }
  return out;
}

Eigen::MatrixXd DecodeFrameBinary(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < 16 ||
      !std::equal(kFrameMagic.begin(), kFrameMagic.end(), bytes.begin())) {
    throw Error(ErrorCode::kParseError, "missing frame magic");
  }
  const auto p = ReadLittleEndian<std::uint32_t>(bytes.data() + 8);
  const auto k = ReadLittleEndian<std::uint32_t>(bytes.data() + 12);
  const std::size_t expected = 16 + 8 * static_cast<std::size_t>(p) * k;
  if (bytes.size() != expected) {
    throw Error(ErrorCode::kParseError, "frame payload size mismatch");
  }
  Eigen::MatrixXd frame(p, k);
  const std::uint8_t* cursor = bytes.data() + 16;
  for (Eigen::Index j = 0; j < frame.cols(); ++j) {
    for (Eigen::Index i = 0; i < frame.rows(); ++i) {
      frame(i, j) = ReadLittleEndian<double>(cursor);
      cursor += 8;
    }
  }
  return frame;
}

void WriteFrameBinaryFile(const std::string& path,
                          const Eigen::MatrixXd& frame) {
  const auto bytes = EncodeFrameBinary(frame);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::kIoError, "short write to " + path);
}

void WriteTextFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::kIoError, "short write to " + path);
}

}  // namespace dppca
