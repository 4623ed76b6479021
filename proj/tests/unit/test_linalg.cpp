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

#include "gobsel/linalg.hpp"

#include <gtest/gtest.h>

using namespace gob;

TEST(Linalg, VecIsColumnMajorAndUnvecInverts) {
    CMat m(2, 3);
    m << 1, 2, 3, 4, 5, 6;
    const CVec v = vec(m);
    EXPECT_EQ(v(0), cplx(1));
    EXPECT_EQ(v(1), cplx(4));
    EXPECT_EQ(v(2), cplx(2));
    EXPECT_EQ(unvec(v, 2, 3), m);
    EXPECT_THROW(unvec(v, 4, 2), InvalidArgument);
}

TEST(Linalg, KronMatchesDefinitionEntrywise) {
    Rng rng(1);
    const CMat a = randn_complex(rng, 2, 3), b = randn_complex(rng, 3, 2);
    const CMat k = kron(a, b);
    ASSERT_EQ(k.rows(), 6);
    ASSERT_EQ(k.cols(), 6);
    for (Index i = 0; i < 2; ++i)
        for (Index j = 0; j < 3; ++j)
            for (Index p = 0; p < 3; ++p)
                for (Index q = 0; q < 2; ++q)
                    EXPECT_EQ(k(i * 3 + p, j * 2 + q), a(i, j) * b(p, q));
}

TEST(Linalg, VecOfProductIdentity) {
    Rng rng(2);
    for (int n = 0; n < 20; ++n) {
        const CMat h = randn_complex(rng, 4, 6), v = randn_complex(rng, 6, 3), w = randn_complex(rng, 4, 2);
        const CVec lhs = vec(w.adjoint() * h * v);
        const CVec rhs = kron(v.transpose(), w.adjoint()) * vec(h);
        EXPECT_LT((lhs - rhs).norm() / rhs.norm(), 1e-12);
    }
}

TEST(Linalg, PsdSqrtSquaresBack) {
    Rng rng(3);
    const CMat x = randn_complex(rng, 6, 3);
    const CMat s = x * x.adjoint(); // rank 3
    const CMat r = psd_sqrt(s);
    EXPECT_LT((r * r - s).norm() / s.norm(), 1e-10);
    EXPECT_LT(hermitian_defect(r), 1e-12);
    EXPECT_EQ(psd_sqrt(CMat::Zero(3, 3)), CMat::Zero(3, 3));
}

TEST(Linalg, PsdSqrtRejectsIndefinite) {
    CMat m = CMat::Identity(2, 2);
    m(1, 1) = -1.0;
    EXPECT_THROW(psd_sqrt(m), NumericalDomain);
    EXPECT_THROW(psd_sqrt(CMat::Zero(2, 3)), InvalidArgument);
}

TEST(Linalg, NullSpaceIsOrthonormalAndAnnihilates) {
    Rng rng(4);
    const CMat a = randn_complex(rng, 3, 7);
    const CMat n = null_space(a);
    ASSERT_EQ(n.cols(), 4);
    EXPECT_LT((a * n).norm(), 1e-12 * a.norm());
    EXPECT_LT((n.adjoint() * n - CMat::Identity(4, 4)).norm(), 1e-12);
    EXPECT_EQ(null_space(CMat::Zero(2, 3)).cols(), 3);
    EXPECT_EQ(numerical_rank(a), 3);
}

TEST(Linalg, Log2DetMatchesEigenvalues) {
    Rng rng(5);
    const CMat x = randn_complex(rng, 4, 6);
    const CMat m = x * x.adjoint();
    Eigen::SelfAdjointEigenSolver<CMat> es(m);
    double ref = 0.0;
    for (Index i = 0; i < 4; ++i)
        ref += std::log2(es.eigenvalues()(i));
    EXPECT_NEAR(log2_det_hpd(m), ref, 1e-10);
    EXPECT_THROW(log2_det_hpd(CMat::Zero(2, 2)), NumericalDomain);
}

TEST(Linalg, PrincipalSubmatrixPicksRowsAndColumns) {
    CMat m(3, 3);
    m << 1, 2, 3, 4, 5, 6, 7, 8, 9;
    const std::vector<int> idx{2, 0};
    CMat ref(2, 2);
    ref << 9, 7, 3, 1;
    EXPECT_EQ(principal_submatrix(m, idx), ref);
}

TEST(Linalg, DerivedSeedsAreDistinctAndStable) {
    EXPECT_EQ(derive_seed(1, 2, 3), derive_seed(1, 2, 3));
    EXPECT_NE(derive_seed(1, 2, 3), derive_seed(1, 3, 2));
    EXPECT_NE(derive_seed(1, 2, 3), derive_seed(2, 2, 3));
}

TEST(Linalg, RandnHasUnitVariance) {
    Rng rng(6);
    const CMat z = randn_complex(rng, 20000, 1);
    EXPECT_NEAR(z.squaredNorm() / 20000.0, 1.0, 0.03);
    EXPECT_LT(std::abs(z.sum()) / 20000.0, 0.03);
}
