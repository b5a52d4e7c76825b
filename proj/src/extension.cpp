#include "galdesc/extension.hpp"

#include <algorithm>

#include "galdesc/homsearch.hpp"

namespace galdesc {

GroupExtension::GroupExtension(FiniteGroup kernel_group,
                               FiniteGroup total_group,
                               FiniteGroup quotient_group, Homomorphism iota,
                               Homomorphism pi)
    : kernel_(std::move(kernel_group)),
      total_(std::move(total_group)),
      quotient_(std::move(quotient_group)),
      iota_(std::move(iota)),
      pi_(std::move(pi)),
      kernel_image_(Subgroup::trivial(total_)) {
  if (!iota_.domain().same(kernel_) || !iota_.codomain().same(total_))
    throw ValidationError("extension: iota must map the kernel group into "
                          "the total group");
  if (!pi_.domain().same(total_) || !pi_.codomain().same(quotient_))
    throw ValidationError("extension: pi must map the total group onto the "
                          "quotient group");
  if (!iota_.is_injective())
    throw ValidationError("extension: iota is not injective");
  if (!pi_.is_surjective())
    throw ValidationError("extension: pi is not surjective");

  kernel_image_ = iota_.image();
  if (!(kernel_image_ == pi_.kernel()))
    throw ValidationError("extension: image(iota) differs from kernel(pi)");
  if (!is_normal(total_, kernel_image_))
    throw ValidationError("extension: image(iota) is not normal");

  iota_inv_.assign(total_.order(), -1);
  for (Elem x = 0; x < kernel_.order(); ++x)
    iota_inv_[static_cast<size_t>(iota_(x))] = x;
}

SplitExtension split_extension(const FiniteGroup& g, const FiniteGroup& q,
                               const GroupAction& theta,
                               const SearchBudget& budget) {
  auto sd = semidirect_product(g, q, theta, budget);
  GroupExtension ext(g, sd.total, q, sd.iota, sd.pi);
  return SplitExtension{std::move(ext), sd.canonical_section};
}

Section::Section(GroupExtension extension, Homomorphism map)
    : extension_(std::move(extension)), map_(std::move(map)) {
  const FiniteGroup& q = extension_.quotient_group();
  if (!map_.domain().same(q) ||
      !map_.codomain().same(extension_.total_group()))
    throw ValidationError("section: map must go from the quotient group "
                          "into the total group");
  for (Elem x = 0; x < q.order(); ++x)
    if (extension_.pi()(map_(x)) != x)
      throw ValidationError("section: pi after the map is not the identity");
  for (Elem x = 0; x < q.order(); ++x)
    if (x != q.identity() && extension_.kernel_image().contains(map_(x)))
      throw ValidationError("section: image meets iota(G) beyond the "
                            "identity");
}

Subgroup Section::image() const {
  return map_.image();
}

std::vector<Section> enumerate_sections(const GroupExtension& ext,
                                        const SearchBudget& budget) {
  const FiniteGroup& q = ext.quotient_group();
  const FiniteGroup& gamma = ext.total_group();

  // generator images are confined to the fibers of pi
  auto gens = generating_sequence(q);
  std::vector<std::vector<Elem>> fibers(gens.size());
  for (size_t i = 0; i < gens.size(); ++i)
    for (Elem x = 0; x < gamma.order(); ++x)
      if (ext.pi()(x) == gens[i]) fibers[i].push_back(x);

  long long count = 1;
  for (const auto& f : fibers) {
    count *= static_cast<long long>(f.size());
    if (count > budget.max_candidates)
      throw BudgetError("enumerate_sections: candidate count exceeds "
                        "max_candidates " +
                        std::to_string(budget.max_candidates));
  }

  // walk the quotient breadth-first so each element is a prefix * generator
  std::vector<Elem> order_q;
  std::vector<std::pair<Elem, int>> via(q.order(), {-1, -1});
  {
    std::vector<bool> seen(q.order(), false);
    seen[static_cast<size_t>(q.identity())] = true;
    order_q.push_back(q.identity());
    for (size_t i = 0; i < order_q.size(); ++i)
      for (size_t k = 0; k < gens.size(); ++k) {
        Elem y = q.mul(order_q[i], gens[k]);
        if (!seen[static_cast<size_t>(y)]) {
          seen[static_cast<size_t>(y)] = true;
          via[static_cast<size_t>(y)] = {order_q[i], static_cast<int>(k)};
          order_q.push_back(y);
        }
      }
  }

  std::vector<std::vector<Elem>> images_found;
  const size_t k = fibers.size();
  std::vector<size_t> idx(k, 0);
  std::vector<Elem> images(q.order());
  while (true) {
    images.assign(q.order(), -1);
    images[static_cast<size_t>(q.identity())] = gamma.identity();
    for (Elem x : order_q) {
      if (x == q.identity()) continue;
      auto [prefix, gi] = via[static_cast<size_t>(x)];
      images[static_cast<size_t>(x)] =
          gamma.mul(images[static_cast<size_t>(prefix)],
                    fibers[static_cast<size_t>(gi)][idx[static_cast<size_t>(gi)]]);
    }
    bool ok = true;
    for (Elem x = 0; x < q.order() && ok; ++x) {
      if (ext.pi()(images[static_cast<size_t>(x)]) != x) ok = false;
      for (Elem y = 0; y < q.order() && ok; ++y)
        if (images[static_cast<size_t>(q.mul(x, y))] !=
            gamma.mul(images[static_cast<size_t>(x)],
                      images[static_cast<size_t>(y)]))
          ok = false;
    }
    if (ok) images_found.push_back(images);

    size_t pos = 0;
    while (pos < k && ++idx[pos] == fibers[pos].size()) {
      idx[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
  }
  std::sort(images_found.begin(), images_found.end());

  std::vector<Section> sections;
  sections.reserve(images_found.size());
  for (auto& im : images_found)
    sections.emplace_back(ext, Homomorphism(q, gamma, std::move(im)));
  return sections;
}

std::vector<Subgroup> complements_of_kernel(const GroupExtension& ext) {
  const FiniteGroup& gamma = ext.total_group();
  const int q_order = ext.quotient_group().order();
  std::vector<Subgroup> result;
  for (const auto& h : all_subgroups(gamma)) {
    if (h.order() != q_order) continue;
    if (intersect(h, ext.kernel_image()).order() != 1) continue;
    if (ext.pi().image_of(h).order() != q_order) continue;
    result.push_back(h);
  }
  return result;
}

bool is_model_galois(const GroupExtension& ext, const Section& s) {
  if (!s.extension().total_group().same(ext.total_group()))
    throw ValidationError("is_model_galois: section belongs to a different "
                          "extension");
  const FiniteGroup& gamma = ext.total_group();
  for (Elem x = 0; x < ext.quotient_group().order(); ++x)
    for (Elem gk : ext.kernel_image().elements())
      if (!gamma.commutes(s(x), gk)) return false;
  return true;
}

bool restriction_is_galois(const GroupExtension& ext, const Section& s,
                           const Subgroup& h_of_q) {
  if (!h_of_q.parent().same(ext.quotient_group()))
    throw ValidationError("restriction_is_galois: subgroup must live in the "
                          "quotient group");
  const FiniteGroup& gamma = ext.total_group();
  for (Elem x : h_of_q.elements())
    for (Elem gk : ext.kernel_image().elements())
      if (!gamma.commutes(s(x), gk)) return false;
  return true;
}

}  // namespace galdesc
