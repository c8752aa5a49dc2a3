#pragma once

#include <stdexcept>
#include <string>

namespace chowpoly {

// substitution or residue hit a zero/pole; `atom` names the vanishing factor
struct NotAUnitError : std::runtime_error {
    std::string atom;
    explicit NotAUnitError(const std::string& atom_text)
        : std::runtime_error("not a unit at divisor: " + atom_text), atom(atom_text) {}
};

// a boundary divisor whose defining atom is linear in no variable
struct UnparametrizableDivisorError : std::runtime_error {
    explicit UnparametrizableDivisorError(const std::string& atom_text)
        : std::runtime_error("unparametrizable divisor: " + atom_text) {}
};

// residue slot degenerated while computing a tame symbol
struct IndeterminateResidueError : std::runtime_error {
    explicit IndeterminateResidueError(const std::string& what)
        : std::runtime_error("indeterminate residue: " + what) {}
};

}  // namespace chowpoly
