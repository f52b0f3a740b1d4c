// Copyright 2026 The negaff Authors
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

#ifndef NEGAFF_REALIZATION_HPP
#define NEGAFF_REALIZATION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "negaff/fock.hpp"
#include "negaff/lattice.hpp"
#include "negaff/parafermion.hpp"
#include "negaff/report.hpp"

namespace negaff {

enum class CurrentKind { X, Y, H, ZPlus, ZMinus };

/// Image of a current under the free-field map: E-factors (in the current's
/// own variable) tensor a parafermion field tensor e^{shift alpha} x^{a alpha}.
/// The H current is the full Heisenberg current plus H(0) on the lattice.
struct CurrentExpr {
    CurrentKind kind = CurrentKind::H;
    std::string name;
    std::vector<FockFactor> efactors;
    bool heisenberg = false;
    std::optional<AType> field;
    int shift = 0;
    SectorPower power{Exponent(0)};
};

CurrentExpr build_current(CurrentKind which, int k);
/// Dressed Z operator: Z+ = E_+^-(z) X(z) E_-^-(z), Z- = E_+^+(z) Y(z) E_-^+(z).
CurrentExpr build_z_operator(int sign, int k);
/// Cancels adjacent inverse pairs E_d^s E_d^-s of the same variable.
CurrentExpr reduce(const CurrentExpr& e);

/// Operator content an answer is expanded against: a parafermion label
/// ("1" for the identity) and the lattice sector of the output.
struct OpKey {
    std::string field;
    int sector = 0;
    friend auto operator<=>(const OpKey&, const OpKey&) = default;
    std::string str() const;
};

/// One series per Fock column, indexed like fock_basis(D).
using ColumnSet = std::vector<VecSeries>;
using KeyedColumns = std::map<OpKey, ColumnSet>;

struct SectorBracket {
    int sector = 0;
    /// Bracket after E-reordering with exchange scalars and cancellation.
    KeyedColumns canonical;
    /// Brute-force products in both orders (with generalized factors).
    KeyedColumns ab, ba;
    /// Declared right-hand side.
    KeyedColumns target;
    /// Vacuum-to-vacuum coefficient of the identity part of the
    /// canonical bracket, by w exponent on the antidiagonal.
    std::map<Exponent, Rat> delta_coeff;
    /// Structural problems: E-words that differ, symbols that survive.
    std::vector<std::string> leftover;
};

struct BracketResult {
    std::vector<FockBasisElt> columns;
    std::vector<SectorBracket> sectors;
};

struct BracketOptions {
    int k = 1, N = 6, D = 4, W = 2;
    /// Multiply each order by (1 - y/x)^{-<a,b>/k}.
    bool generalized = false;
    /// Use the printed -2X(w) delta target for [H, Y].
    bool literal_hy = false;
};

/// [a(z), b(w)] per sector |n| <= W and Fock column of degree <= D.
BracketResult bracket_currents(const CurrentExpr& a, const CurrentExpr& b, const BracketOptions& opts);

/// canonical - target, key by key.
KeyedColumns residual(const SectorBracket& s);

/// Compares two keyed column sets on rows of degree <= D. Stored points of
/// `probe_source` count as checked even where both sides vanish.
CheckOutcome compare_keyed(const KeyedColumns& lhs, const KeyedColumns& rhs,
                           const std::vector<FockBasisElt>& cols, int D,
                           const KeyedColumns* probe_source = nullptr);

struct CurrentOptions {
    bool literal_hy = false;
};

/// Current brackets XX, YY, XY, HX, HY, HH; one report per pair and sector.
std::vector<VerifyReport> verify_currents(int k, int N, int D, int W, const CurrentOptions& opts = {});

/// Heisenberg-mode brackets with the E-operators, X, Y and the Z operators
/// for 0 < |n| <= N, and [E(z), Z(w)] = 0.
std::vector<VerifyReport> verify_z_modes(int k, int N, int D);

/// Generalized Z brackets in dressed and reduced form, and their agreement.
std::vector<VerifyReport> verify_z_brackets(int k, int N, int D, int W);

/// Kernel of the positive Heisenberg modes on degree <= D times 2W+1
/// sectors, and the graded-dimension convolution.
VerifyReport vacuum_decompose(int k, int D, int W);

}  // namespace negaff

#endif
