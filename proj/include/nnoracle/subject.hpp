#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace nno::subject {

// The subject under test: a small credit-approval routine over a finite
// discrete domain, plus 21 single-predicate mutants of it that simulate
// regression faults.

struct CustomerRecord {
  int citizenship = 0;  // {0,1}
  int state = 0;        // {0,1}
  int region = 0;       // {0..6}
  int sex = 0;          // {0,1}
  int age = 0;          // {0..99}
  int marital = 0;      // {0,1}
  int dependents = 0;   // {0..4}
  int income = 0;       // {0..3}

  bool operator==(const CustomerRecord&) const = default;
};

struct Decision {
  bool approved = false;
  int amount = 0;
};

// Inclusive upper bounds, in lexicographic field order.
inline constexpr std::array<int, 8> kFieldMax = {1, 1, 6, 1, 99, 1, 4, 3};

inline constexpr std::int64_t kDomainSize = 224000;  // 2*2*7*2*100*2*5*4
inline constexpr int kMaxAmount = 18000;
inline constexpr int kMutantCount = 21;

bool in_domain(const CustomerRecord& x);

// Reference behaviour. Throws std::domain_error on out-of-range fields.
Decision approve(const CustomerRecord& x);

// Mutant `id` in 1..21: approve with exactly one predicate replaced.
// Throws std::domain_error on unknown id or out-of-range fields.
Decision mutant(int id, const CustomerRecord& x);

// True iff the mutant's amount differs from approve's on x. The approved
// flag is deliberately ignored.
bool is_exposing(int id, const CustomerRecord& x);

// Bijection between [0, kDomainSize) and records, lexicographic over
// (citizenship, state, region, sex, age, marital, dependents, income).
CustomerRecord record_at(std::int64_t index);
std::int64_t index_of(const CustomerRecord& x);

// Visits all 224000 records in lexicographic order.
template <class Fn>
void for_each_record(Fn&& fn) {
  for (std::int64_t i = 0; i < kDomainSize; ++i) fn(record_at(i));
}

struct MutantInfo {
  int id;
  int line;  // line in the reference listing whose predicate is replaced
  const char* original;
  const char* replacement;
};

const std::array<MutantInfo, kMutantCount>& mutant_table();

}  // namespace nno::subject
