#pragma once

#include <array>
#include <string>
#include <vector>

#include "cutrank/group.hpp"

namespace cutrank {

/**
 * The three nested partitions of a group: conjugacy classes, R-classes
 * (class of g merged with the class of g^-1) and Q-classes (classes of all
 * g^j with j coprime to |g| merged). conj refines r_classes refines
 * q_classes, so n_C >= n_R >= n_Q.
 */
struct ClassPartition {
    Partition conj;
    Partition r_classes;
    Partition q_classes;
    int n_C = 0;
    int n_R = 0;
    int n_Q = 0;
};

ClassPartition class_partition(const FiniteGroup& g);

/// Strongest-first element classification. Rational: every coprime power is
/// conjugate to the element. InverseSemiRational: every coprime power is
/// conjugate to the element or its inverse. SemiRational: every coprime power
/// is conjugate to the element or to one fixed power of it. None otherwise.
enum class Rationality { None, SemiRational, InverseSemiRational, Rational };

struct ElementClassification {
    Rationality tag = Rationality::None;
    bool is_real = false; // conjugate to its inverse
};

ElementClassification classify_element(const FiniteGroup& g, const Partition& conj, int x);
ElementClassification classify_element(const FiniteGroup& g, int x);

std::string rationality_name(Rationality r);

/// Sorted set of elements classified Rational or InverseSemiRational.
std::vector<int> inverse_semi_rational_set(const FiniteGroup& g);
std::vector<int> inverse_semi_rational_set(const FiniteGroup& g, const ClassPartition& cp);

/// Verdict of the split-class structure test:
///  - AllInverseSemiRational: every element is inverse semi-rational (rank 0);
///  - SingleSplitQClass: exactly one Q-class splits, into exactly two
///    R-classes, and it is the whole complement of the inverse semi-rational
///    set (rank 1);
///  - NotEcut otherwise (rank >= 2).
enum class EcutVerdict { AllInverseSemiRational, SingleSplitQClass, NotEcut };

struct EcutWitness {
    EcutVerdict verdict = EcutVerdict::NotEcut;
    std::vector<int> q_block;                   // engaged for SingleSplitQClass
    std::array<std::vector<int>, 2> r_blocks;   // the two R-classes of q_block
};

EcutWitness ecut_witness(const FiniteGroup& g);
EcutWitness ecut_witness(const FiniteGroup& g, const ClassPartition& cp);

std::string ecut_verdict_name(EcutVerdict v);

} // namespace cutrank
