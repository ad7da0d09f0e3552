//
// Copyright 2026 The annealopt Authors
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

#ifndef ANNEALOPT_CSV_HPP_
#define ANNEALOPT_CSV_HPP_

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

namespace annealopt {

// Shortest round-trip decimal form; byte-stable across runs.
std::string csv_num(double v);
std::string csv_num(std::int64_t v);
std::string csv_num(int v);

class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path);

  void row(const std::vector<std::string>& cells);

  bool good() const { return out_.good(); }

 private:
  std::ofstream out_;
};

}  // namespace annealopt

#endif  // ANNEALOPT_CSV_HPP_
