#pragma once

#include <set>
#include <string>
#include <vector>

#include "barcomb/degrees.hpp"
#include "barcomb/hooks.hpp"
#include "barcomb/partition.hpp"

namespace barcomb {

// Spin residue of a node: ⌊c/2⌋ mod 2.
int spin_residue(Node n);
Content2 spin_content(const Partition& la);

// Slope index of a node: (r,c) lies in slope 2r + ⌊c/2⌋ - 2.
int slope_of(Node n);

long long slp(const Partition& la, int l);   // nodes in slope l
long long aslp(const Partition& la, int l);  // spin-addable nodes in slope l
long long rslp(const Partition& la, int l);  // spin-removable nodes in slope l
long long zslp(const Partition& la, int l);  // z-nodes in slope l

// Extremal strict partitions reachable by removing/adding residue-i nodes.
Partition lambda_down(const Partition& strict, int i);
Partition lambda_up(const Partition& strict, int i);

std::set<Node> spin_removable(const Partition& strict, int i);
std::set<Node> spin_addable(const Partition& strict, int i);

// ⟨e_i^(a)⟨λ⟩, ⟨μ⟩⟩ for strict λ, μ with |λ| = |μ| + a.
SqrtTwoScalar spin_branch_coeff(const Partition& la, const Partition& mu, int i, int a);

struct SignSeq {
    std::string signs;  // characters '+' and '-'
    bool operator==(const SignSeq&) const = default;
};

// Confluent normal form "-…-+…+".
SignSeq reduce_signs(const SignSeq& s);

struct Signature {
    SignSeq seq;                         // raw i-signature, top to bottom
    std::vector<Node> addable;           // ordinary addable i-nodes, top to bottom
    std::vector<Node> removable;         // ordinary removable i-nodes, top to bottom
    std::set<Node> normal;               // removable nodes surviving reduction
    std::set<Node> conormal;             // addable nodes surviving reduction
};

// Ordinary-residue i-signature of a 2-regular Brauer-character label.
Signature i_signature(const Partition& mu, int i);

Partition e_max_label(const Partition& mu, int i);
Partition f_max_label(const Partition& mu, int i);

// Exact test ε_i φ(λ^dblreg) < ε_i⟨λ⟩, and the slope-based sufficient test.
bool noregdown(const Partition& strict, int i);
bool noregdown_sufficient(const Partition& strict, int i);

}  // namespace barcomb
