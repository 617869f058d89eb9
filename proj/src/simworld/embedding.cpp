#include "steach/simworld/embedding.hpp"

#include <cmath>
#include <stdexcept>

#include "steach/common/rng.hpp"

namespace steach::simworld {

double cosine_similarity(const FaceEmbedding& a, const FaceEmbedding& b) {
    const double na = a.norm(), nb = b.norm();
    if (na == 0.0 || nb == 0.0) return 0.0;
    return a.dot(b) / (na * nb);
}

FaceEmbeddingSim::FaceEmbeddingSim(std::uint64_t base_seed, double perturb_sigma)
    : base_seed_(base_seed), sigma_(perturb_sigma) {}

void FaceEmbeddingSim::register_identity(std::uint32_t identity) {
    if (bases_.count(identity)) return;
    // rejection-sample a unit vector nearly orthogonal to all existing bases;
    // draws are seeded per (identity, attempt) so registration order of other
    // identities does not change this identity's base
    for (std::uint64_t attempt = 0;; ++attempt) {
        RandomEngine rng = make_rng(base_seed_, (std::uint64_t(identity) << 16) + attempt);
        FaceEmbedding v(kEmbeddingDim);
        for (int i = 0; i < kEmbeddingDim; ++i) v[i] = rng.normal();
        v.normalize();
        bool ok = true;
        for (const auto& [id, b] : bases_)
            if (std::abs(cosine_similarity(v, b)) >= 0.3) {
                ok = false;
                break;
            }
        if (ok) {
            bases_.emplace(identity, std::move(v));
            return;
        }
    }
}

bool FaceEmbeddingSim::is_registered(std::uint32_t identity) const {
    return bases_.count(identity) > 0;
}

const FaceEmbedding& FaceEmbeddingSim::base(std::uint32_t identity) const {
    auto it = bases_.find(identity);
    if (it == bases_.end())
        throw std::invalid_argument("unknown identity: " +
                                    std::to_string(identity));
    return it->second;
}

FaceEmbedding FaceEmbeddingSim::sample(std::uint32_t identity,
                                       std::uint64_t noise_seed) const {
    return sample(identity, noise_seed, sigma_);
}

FaceEmbedding FaceEmbeddingSim::sample(std::uint32_t identity,
                                       std::uint64_t noise_seed,
                                       double sigma) const {
    FaceEmbedding v = base(identity);
    if (sigma > 0.0) {
        RandomEngine rng = make_rng(mix_seed(base_seed_, 0x5A17), noise_seed);
        for (int i = 0; i < kEmbeddingDim; ++i) v[i] += sigma * rng.normal();
        v.normalize();
    }
    return v;
}

std::vector<FaceEmbedding> make_negatives_pool(FaceEmbeddingSim& sim,
                                               std::size_t count,
                                               std::size_t identities,
                                               std::uint64_t seed) {
    for (std::size_t i = 0; i < identities; ++i)
        sim.register_identity(kPoolIdentityBase + static_cast<std::uint32_t>(i));
    std::vector<FaceEmbedding> pool;
    pool.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const auto id =
            kPoolIdentityBase + static_cast<std::uint32_t>(i % identities);
        pool.push_back(sim.sample(id, mix_seed(seed, i)));
    }
    return pool;
}

}  // namespace steach::simworld
