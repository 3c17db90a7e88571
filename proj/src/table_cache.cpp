#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "trinom/sequences.hpp"

namespace trinom {

struct TableCache::Impl {
  using Key = std::tuple<std::uint64_t, std::uint64_t, std::uint64_t, Provenance>;

  mutable std::shared_mutex mutex;
  std::map<Key, std::shared_ptr<const ResidueTable>> tables;
};

TableCache::TableCache() : impl_(std::make_unique<Impl>()) {}
TableCache::~TableCache() = default;

std::shared_ptr<const ResidueTable> TableCache::get(const QuadraticSpec& spec, PrimeModulus p,
                                                    Provenance route) {
  const std::uint64_t q = p.value();
  const Impl::Key key{raw::reduce(spec.a, q), raw::reduce(spec.b, q), q, route};
  {
    std::shared_lock lock(impl_->mutex);
    if (auto it = impl_->tables.find(key); it != impl_->tables.end()) return it->second;
  }
  auto fresh = std::make_shared<const ResidueTable>(
      route == Provenance::recurrence ? table_via_recurrence(spec, p)
                                      : table_via_poly_pow(spec, p));
  std::unique_lock lock(impl_->mutex);
  return impl_->tables.try_emplace(key, std::move(fresh)).first->second;
}

std::size_t TableCache::size() const {
  std::shared_lock lock(impl_->mutex);
  return impl_->tables.size();
}

void TableCache::clear() {
  std::unique_lock lock(impl_->mutex);
  impl_->tables.clear();
}

TableCache& default_table_cache() {
  static TableCache cache;
  return cache;
}

}  // namespace trinom
