/*
 * Copyright 2026 The empg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "empg/rational_lp.hpp"

#include <stdexcept>

namespace empg::lp {

namespace {

constexpr std::size_t none = static_cast<std::size_t>(-1);

class Tableau
{
public:
    std::vector<std::vector<Rational>> rows; // last column is the right-hand side
    std::vector<std::size_t> basis;
    std::size_t cols = 0;                    // structural columns, rhs excluded

    void pivot(std::size_t r, std::size_t c)
    {
        std::vector<Rational> &pr = rows[r];
        const Rational inv = 1 / pr[c];
        for (std::size_t j = 0; j <= cols; j++) {
            if (sgn(pr[j]) != 0) pr[j] *= inv;
        }
        // columns with a nonzero entry in the pivot row are the only ones to update
        std::vector<std::size_t> nz;
        for (std::size_t j = 0; j <= cols; j++) {
            if (sgn(pr[j]) != 0) nz.push_back(j);
        }
        Rational f;
        for (std::size_t i = 0; i < rows.size(); i++) {
            if (i == r || sgn(rows[i][c]) == 0) continue;
            f = rows[i][c];
            for (std::size_t j : nz) rows[i][j] -= f * pr[j];
        }
        basis[r] = c;
    }

    // maximize cost . x over allowed columns; returns false when unbounded
    bool optimize(const std::vector<Rational> &cost, const std::vector<bool> &allowed)
    {
        std::vector<Rational> d(cols);
        Rational t;
        for (;;) {
            // reduced costs d_j = c_j - c_B . column_j
            for (std::size_t j = 0; j < cols; j++) d[j] = cost[j];
            for (std::size_t i = 0; i < rows.size(); i++) {
                const Rational &cb = cost[basis[i]];
                if (sgn(cb) == 0) continue;
                for (std::size_t j = 0; j < cols; j++) {
                    if (sgn(rows[i][j]) != 0) d[j] -= cb * rows[i][j];
                }
            }
            std::size_t enter = none;
            for (std::size_t j = 0; j < cols; j++) {
                if (allowed[j] && sgn(d[j]) > 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == none) return true;
            std::size_t leave = none;
            Rational best;
            for (std::size_t i = 0; i < rows.size(); i++) {
                if (sgn(rows[i][enter]) <= 0) continue;
                t = rows[i][cols] / rows[i][enter];
                if (leave == none || t < best || (t == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = t;
                }
            }
            if (leave == none) return false;
            pivot(leave, enter);
        }
    }
};

} // namespace

Solution
solve(const Problem &p)
{
    const std::size_t n = p.num_vars;
    const std::size_t m = p.constraints.size();

    // column layout: originals, one slack or surplus per inequality, artificials
    std::size_t nslack = 0, nart = 0;
    std::vector<int> flip(m, 1);
    for (std::size_t i = 0; i < m; i++) {
        const Constraint &c = p.constraints[i];
        Relation rel = c.rel;
        if (sgn(c.rhs) < 0) {
            flip[i] = -1;
            if (rel == Relation::LessEqual) rel = Relation::GreaterEqual;
            else if (rel == Relation::GreaterEqual) rel = Relation::LessEqual;
        }
        if (rel != Relation::Equal) nslack++;
        if (rel != Relation::LessEqual) nart++;
    }
    Tableau T;
    T.cols = n + nslack + nart;
    T.rows.assign(m, std::vector<Rational>(T.cols + 1));
    T.basis.assign(m, none);
    std::size_t s = n, a = n + nslack;
    for (std::size_t i = 0; i < m; i++) {
        const Constraint &c = p.constraints[i];
        auto &row = T.rows[i];
        for (const auto &[j, v] : c.terms) {
            if (j >= n) throw std::out_of_range("constraint refers to unknown variable");
            row[j] += flip[i] * v;
        }
        row[T.cols] = flip[i] * c.rhs;
        Relation rel = c.rel;
        if (flip[i] < 0 && rel != Relation::Equal) {
            rel = rel == Relation::LessEqual ? Relation::GreaterEqual : Relation::LessEqual;
        }
        if (rel == Relation::LessEqual) {
            row[s] = 1;
            T.basis[i] = s++;
        } else {
            if (rel == Relation::GreaterEqual) row[s++] = -1;
            row[a] = 1;
            T.basis[i] = a++;
        }
    }

    Solution sol;
    std::vector<bool> allowed(T.cols, true);
    if (nart > 0) {
        std::vector<Rational> c1(T.cols);
        for (std::size_t j = n + nslack; j < T.cols; j++) c1[j] = -1;
        T.optimize(c1, allowed);
        Rational v;
        for (std::size_t i = 0; i < T.rows.size(); i++) v += c1[T.basis[i]] * T.rows[i][T.cols];
        if (sgn(v) < 0) {
            sol.status = Status::Infeasible;
            return sol;
        }
        // drive artificials out of the basis, dropping redundant rows
        for (std::size_t i = 0; i < T.rows.size();) {
            if (T.basis[i] < n + nslack) {
                i++;
                continue;
            }
            std::size_t j = 0;
            while (j < n + nslack && sgn(T.rows[i][j]) == 0) j++;
            if (j < n + nslack) {
                T.pivot(i, j);
                i++;
            } else {
                T.rows.erase(T.rows.begin() + static_cast<std::ptrdiff_t>(i));
                T.basis.erase(T.basis.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
        for (std::size_t j = n + nslack; j < T.cols; j++) allowed[j] = false;
    }

    std::vector<Rational> c2(T.cols);
    for (std::size_t j = 0; j < n && j < p.objective.size(); j++) c2[j] = p.maximize ? p.objective[j] : -p.objective[j];
    if (!T.optimize(c2, allowed)) {
        sol.status = Status::Unbounded;
        return sol;
    }
    sol.status = Status::Optimal;
    sol.x.assign(n, 0);
    for (std::size_t i = 0; i < T.rows.size(); i++) {
        if (T.basis[i] < n) sol.x[T.basis[i]] = T.rows[i][T.cols];
    }
    for (std::size_t j = 0; j < n && j < p.objective.size(); j++) sol.value += p.objective[j] * sol.x[j];
    return sol;
}

} // namespace empg::lp
