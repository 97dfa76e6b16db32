#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace ocha {

/// Partition of {1..n} into r labelled blocks, each sorted ascending.
/// Blocks may be empty.
struct OrderedPartition {
  std::vector<std::vector<int>> blocks;
  int ground = 0;
  friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;
};

/// Partition of {1..n} into r consecutive intervals (possibly empty), with
/// every element of block i smaller than every element of block j for i < j.
struct DottedPartition {
  std::vector<std::vector<int>> blocks;
  int ground = 0;
  friend bool operator==(const DottedPartition&, const DottedPartition&) = default;
};

/// Visits all r^n ordered partitions of {1..n} into r blocks.
void for_each_partition(int n, int r, const std::function<void(const OrderedPartition&)>& visit);
std::vector<OrderedPartition> enumerate_partitions(int n, int r);

/// Visits all C(n+r-1, r-1) dotted partitions of {1..n} into r blocks.
void for_each_dotted_partition(int n, int r,
                               const std::function<void(const DottedPartition&)>& visit);
std::vector<DottedPartition> enumerate_dotted_partitions(int n, int r);

/// Unordered set partitions of {1..n} into nonempty blocks, blocks listed by
/// increasing minimum element.
void for_each_set_partition(int n, const std::function<void(const OrderedPartition&)>& visit);

std::uint64_t binomial(int n, int k);
std::uint64_t factorial(int n);

}  // namespace ocha
