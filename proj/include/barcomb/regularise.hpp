#pragma once

#include "barcomb/partition.hpp"

namespace barcomb {

// Ladder index of a node: (r,c) lies in ladder r + c - 2.
inline int ladder_of(Node n) { return n.row + n.col - 2; }

// Move every node to the top of its ladder; output is 2-regular.
Partition regularise(const Partition& la);

// Split each part of a strict partition into its two halves.
Partition double_partition(const Partition& strict);
Partition dblreg(const Partition& strict);

// Reduce a strict partition to its 4-bar-core (remove even parts, remove
// pairs summing to a multiple of 4, lower odd parts by 4).
Partition four_bar_core(const Partition& strict);
bool is_four_bar_core(const Partition& la);

// Mutually inverse bijections between 4-bar-cores and 2-cores.
Partition barcore_to_core(const Partition& tau);
Partition core_to_barcore(const Partition& sigma);

long long lad(const Partition& mu, int l);   // nodes in ladder l
long long alad(const Partition& mu, int l);  // addable nodes in ladder l
long long rlad(const Partition& mu, int l);  // removable nodes in ladder l

}  // namespace barcomb
