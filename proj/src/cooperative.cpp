#include "ties/cooperative.hpp"

namespace ties {

namespace {

void add_checked(std::uint64_t& acc, std::uint64_t v) {
  if (__builtin_add_overflow(acc, v, &acc)) {
    throw NumericError("cooperative counter overflow");
  }
}

}  // namespace

CooperativeCounts cooperative_counts(const EventStore& store, PlayerId x, PlayerId y) {
  CooperativeCounts c;
  for (const auto& cp : store.copresence(x, y)) {
    if (cp.same_team) {
      add_checked(c.direct_assists, cp.x_assists);
      add_checked(c.indirect_assists, cp.x_indirect);
    } else {
      add_checked(c.betrayals, cp.x_betrayals);
    }
  }
  return c;
}

std::uint64_t direct_assists(const EventStore& store, PlayerId x, PlayerId y) {
  return cooperative_counts(store, x, y).direct_assists;
}

std::uint64_t indirect_assists(const EventStore& store, PlayerId x, PlayerId y) {
  return cooperative_counts(store, x, y).indirect_assists;
}

std::uint64_t betrayals_toward(const EventStore& store, PlayerId x, PlayerId y) {
  return cooperative_counts(store, x, y).betrayals;
}

}  // namespace ties
