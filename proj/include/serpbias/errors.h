// Copyright 2026 The serpbias Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SERPBIAS_ERRORS_H_
#define SERPBIAS_ERRORS_H_

#include <stdexcept>
#include <string>

namespace serpbias {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid parameter values (cutoff, persistence, log base, step, df, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed or inconsistent input data.
class InputError : public Error {
 public:
  using Error::Error;
};

// A fairness baseline is undefined for the given list (division by zero,
// infinite divergence, majority protected group, zero normalizer).
class MeasureUndefinedError : public Error {
 public:
  using Error::Error;
};

// A t-test sample with zero variance whose mean differs from the
// hypothesised mean. The statistic is infinite.
class DegenerateSampleError : public Error {
 public:
  DegenerateSampleError(const std::string& what, double mean, int df)
      : Error(what), mean_(mean), df_(df) {}

  double mean() const { return mean_; }
  int df() const { return df_; }

 private:
  double mean_;
  int df_;
};

}  // namespace serpbias

#endif  // SERPBIAS_ERRORS_H_
