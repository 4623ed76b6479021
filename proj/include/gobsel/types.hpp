// SPDX-License-Identifier: Apache-2.0
//
// gobsel: coordinated grid-of-beams selection for FDD multi-user massive MIMO
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef GOBSEL_TYPES_HPP
#define GOBSEL_TYPES_HPP

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gob {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;
using Index = Eigen::Index;

/// Ordered list of beam indices into a codebook.
using BeamList = std::vector<int>;

enum class ErrorKind {
    invalid_argument,
    infeasible_assignment,
    numerical_domain,
    capacity,
    io,
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::infeasible_assignment: return "infeasible-assignment";
    case ErrorKind::numerical_domain: return "numerical-domain";
    case ErrorKind::capacity: return "capacity";
    case ErrorKind::io: return "io";
    }
    return "unknown";
}

// Every library failure is a gob::Error; kind() maps to the CLI exit code.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what) : Error(ErrorKind::invalid_argument, what) {}
};

class NumericalDomain : public Error {
public:
    explicit NumericalDomain(const std::string& what) : Error(ErrorKind::numerical_domain, what) {}
};

class CapacityError : public Error {
public:
    explicit CapacityError(const std::string& what) : Error(ErrorKind::capacity, what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(ErrorKind::io, what) {}
};

/// Raised when block diagonalization cannot null interference for UE `ue()`.
class InfeasibleAssignment : public Error {
public:
    InfeasibleAssignment(int ue, const std::string& what)
        : Error(ErrorKind::infeasible_assignment, what), ue_(ue) {}

    int ue() const noexcept { return ue_; }

private:
    int ue_;
};

inline void require(bool cond, const std::string& what) {
    if (!cond)
        throw InvalidArgument(what);
}

} // namespace gob

#endif // GOBSEL_TYPES_HPP
