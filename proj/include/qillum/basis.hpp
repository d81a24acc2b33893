// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace qillum {

/// Label for one basis vector of a finite-dimensional state space.
///
/// Labels are descriptive metadata carried alongside matrices; two operators
/// may only be combined (traced against each other, subtracted, ...) when
/// their label sequences compare equal.
struct BasisLabel {
  enum class Kind {
    SignalVacuum,   ///< no photon in any signal mode
    SignalMode,     ///< one photon in signal mode `mode` (1-based)
    AncillaMode,    ///< one photon in ancilla mode `mode` (1-based)
    JointProduct,   ///< product of two sub-labels, stored in `parts`
    FockTuple,      ///< per-mode occupation numbers in `occupations`
  };

  Kind kind = Kind::SignalVacuum;
  int mode = 0;
  std::vector<int> occupations;
  std::vector<BasisLabel> parts;  // exactly two entries for JointProduct

  static BasisLabel signal_vacuum() { return {Kind::SignalVacuum, 0, {}, {}}; }
  static BasisLabel signal_mode(int k) { return {Kind::SignalMode, k, {}, {}}; }
  static BasisLabel ancilla_mode(int k) { return {Kind::AncillaMode, k, {}, {}}; }
  static BasisLabel fock(std::vector<int> occ) {
    return {Kind::FockTuple, 0, std::move(occ), {}};
  }
  static BasisLabel joint(BasisLabel lhs, BasisLabel rhs) {
    BasisLabel out;
    out.kind = Kind::JointProduct;
    out.parts = {std::move(lhs), std::move(rhs)};
    return out;
  }

  bool operator==(const BasisLabel& other) const {
    return kind == other.kind && mode == other.mode &&
           occupations == other.occupations && parts == other.parts;
  }
  bool operator!=(const BasisLabel& other) const { return !(*this == other); }

  std::string to_string() const;
};

using Basis = std::vector<BasisLabel>;

/// Signal-photon basis [vac, mode 1, ..., mode d]; the fixed ordering keeps
/// serialized matrices byte-comparable across runs.
Basis signal_basis(int mode_count);

/// Ancilla basis [mode 1, ..., mode d].
Basis ancilla_basis(int mode_count);

}  // namespace qillum
