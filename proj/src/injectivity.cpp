#include "npc2/injectivity.hpp"

#include <algorithm>

#include "npc2/coset.hpp"
#include "npc2/folding.hpp"

namespace npc2 {

Verdict InjectivityResult::aggregate() const {
  bool unknown = false;
  for (const auto& c : components) {
    if (c.verdict.value == Verdict::No) return Verdict::No;
    if (c.verdict.value == Verdict::Unknown) unknown = true;
  }
  return unknown ? Verdict::Unknown : Verdict::Yes;
}

BudgetSpent InjectivityResult::total_spent() const {
  BudgetSpent total;
  for (const auto& c : components) total.add(c.verdict.spent);
  return total;
}

namespace {

// Triviality status of the ambient component's group, with enough data to
// test individual words when the group is finite.
struct AmbientStatus {
  TriVerdict trivial;
  CosetResult regular;  // valid when regular.verdict == Yes
  bool has_regular = false;
};

AmbientStatus analyze_ambient(const GroupPresentation& pres, const Budgets& budgets) {
  AmbientStatus status;
  status.trivial = is_trivial_group(pres, budgets);
  if (status.trivial.value == Verdict::Yes) return status;
  // A closed regular-representation table gives an exact word problem.
  status.regular = coset_enumeration(pres, {}, budgets.max_cosets);
  status.has_regular = status.regular.verdict == Verdict::Yes;
  return status;
}

// True when the word's image is provably trivial in the ambient group.
// Fills v.ambient_trivial_by on success.
bool ambient_kills(const AmbientStatus& ambient, const GroupPresentation& ambient_pres,
                   const Word& ambient_word, ComponentVerdict& v) {
  if (ambient.trivial.value == Verdict::Yes) {
    v.ambient_trivial_by = ambient.trivial.certificate;  // whole group trivial
    return true;
  }
  if (ambient.has_regular) {
    (void)ambient_pres;
    if (ambient.regular.table.trace(0, ambient_word) == 0) {
      v.ambient_trivial_by = "coset-table";
      return true;
    }
  }
  return false;
}

}  // namespace

InjectivityResult induced_map_injectivity(const Subcomplex& sub,
                                          const Subcomplex& ambient,
                                          const Budgets& budgets) {
  if (!sub.same_parent(ambient))
    throw Error(ErrorCode::ParentMismatch, "sub and ambient have different parents");
  if (!ambient.contains(sub))
    throw Error(ErrorCode::ParentMismatch, "sub is not contained in ambient");

  InjectivityResult result;
  ComponentDecomposition sub_comps = connected_components(sub);
  ComponentDecomposition amb_comps = connected_components(ambient);

  for (std::size_t ci = 0; ci < sub_comps.count(); ++ci) {
    const Subcomplex& comp = sub_comps.components[ci];
    ComponentVerdict cv;
    cv.basepoint = sub_comps.basepoints[ci];

    // Ambient component containing this one.
    std::size_t ai = 0;
    while (ai < amb_comps.count() &&
           !amb_comps.components[ai].vertex_mask().test(
               ambient.parent().vertex_index(cv.basepoint)))
      ++ai;
    const Subcomplex& amb = amb_comps.components[ai];

    const bool comp_is_graph = !comp.triangle_mask().any();
    const bool amb_is_graph = !amb.triangle_mask().any();

    GroupPresentation sub_pres = fundamental_group(sub, ci);

    // Free groups into free groups: fold the generator images; the map is
    // injective exactly when the image subgroup has the full rank (free
    // groups are Hopfian).
    if (comp_is_graph && amb_is_graph) {
      GroupPresentation amb_pres = fundamental_group(ambient, ai);
      std::vector<Word> images;
      for (int g = 0; g < sub_pres.generator_count; ++g)
        images.push_back(loop_word(amb_pres, generator_loop(sub_pres, g)));
      FoldedGraph folded = stallings_fold(amb_pres.generator_count, images);
      if (folded.rank() == sub_pres.generator_count) {
        cv.verdict.value = Verdict::Yes;
        cv.verdict.certificate = "fold-rank";
        cv.verdict.detail = "free rank " + std::to_string(sub_pres.generator_count) +
                            " preserved under folding";
      } else {
        cv.verdict.value = Verdict::Unknown;  // unreachable for subgraphs
        cv.verdict.detail = "folded rank dropped unexpectedly";
      }
      result.components.push_back(std::move(cv));
      continue;
    }

    if (comp == amb) {
      cv.verdict.value = Verdict::Yes;
      cv.verdict.certificate = "identity";
      result.components.push_back(std::move(cv));
      continue;
    }

    TriVerdict sub_trivial = is_trivial_group(sub_pres, budgets);
    cv.verdict.spent.add(sub_trivial.spent);
    if (sub_trivial.value == Verdict::Yes) {
      cv.verdict.value = Verdict::Yes;
      cv.verdict.certificate = "trivial-pi1";
      cv.verdict.detail = sub_trivial.certificate;
      result.components.push_back(std::move(cv));
      continue;
    }

    GroupPresentation amb_pres = fundamental_group(ambient, ai);
    IntMatrix amb_relmat = abelianized_relators(amb_pres);

    // Infinite cyclic subgroup mapping to an infinite-order class embeds.
    if (comp_is_graph && sub_pres.generator_count == 1) {
      Word image = loop_word(amb_pres, generator_loop(sub_pres, 0));
      if (infinite_order_in_cokernel(
              amb_relmat, abelianize_word(image, amb_pres.generator_count))) {
        cv.verdict.value = Verdict::Yes;
        cv.verdict.certificate = "infinite-order-image";
        cv.verdict.detail = "generator maps to an infinite-order homology class";
        result.components.push_back(std::move(cv));
        continue;
      }
    }

    // Kernel-witness search: a word nontrivial in the component whose image
    // dies in the ambient component.
    AmbientStatus ambient_status = analyze_ambient(amb_pres, budgets);
    cv.verdict.spent.add(ambient_status.trivial.spent);
    cv.verdict.spent.cosets += ambient_status.regular.cosets_defined;

    IntMatrix sub_relmat = abelianized_relators(sub_pres);
    bool found = false;

    // Without a graph component, the only nontriviality certificate is a
    // nonzero abelianization class; that is linear in the word, so if every
    // generator has zero class no word can ever be certified.
    bool searchable = comp_is_graph;
    if (!searchable)
      for (int g = 0; g < sub_pres.generator_count && !searchable; ++g) {
        std::vector<Integer> unit(sub_pres.generator_count, 0);
        unit[g] = 1;
        if (!zero_in_cokernel(sub_relmat, unit)) searchable = true;
      }

    // Candidate enumeration in canonical order: single generators first,
    // then longer reduced words up to the budgeted length.
    std::vector<Word> frontier{{}};
    if (!searchable) frontier.clear();
    constexpr std::uint64_t kMaxWitnessWords = 20000;
    for (std::size_t length = 1;
         length <= budgets.witness_word_length && !found && !frontier.empty();
         ++length) {
      std::vector<Word> next;
      for (const Word& stem : frontier) {
        if (cv.verdict.spent.words_tried >= kMaxWitnessWords) break;
        for (int letter = 1; letter <= sub_pres.generator_count && !found; ++letter) {
          for (int sign : {+1, -1}) {
            if (found) break;
            if (!stem.empty() && stem.back() == -sign * letter) continue;
            Word w = stem;
            w.push_back(sign * letter);
            next.push_back(w);
            ++cv.verdict.spent.words_tried;
            // Nontriviality certificate for w inside the component.
            std::string nontrivial_by;
            if (comp_is_graph)
              nontrivial_by = "free-reduction";
            else if (!zero_in_cokernel(
                         sub_relmat, abelianize_word(w, sub_pres.generator_count)))
              nontrivial_by = "abelianization";
            else
              continue;
            Word image = loop_word(amb_pres, word_loop(sub_pres, w));
            if (ambient_kills(ambient_status, amb_pres, image, cv)) {
              cv.verdict.value = Verdict::No;
              cv.verdict.certificate = "kernel-witness";
              cv.verdict.witness_word = w;
              cv.witness_word = w;
              cv.witness_loop = word_loop(sub_pres, w);
              cv.sub_nontrivial_by = nontrivial_by;
              cv.verdict.detail = "loop " + word_to_string(w) +
                                  " is nontrivial in the component (" +
                                  nontrivial_by + ") and trivial in the ambient (" +
                                  cv.ambient_trivial_by + ")";
              found = true;
            }
          }
        }
        if (found) break;
      }
      // If the ambient group is not provably trivial and has no closed
      // regular table, longer words cannot help either.
      if (ambient_status.trivial.value != Verdict::Yes && !ambient_status.has_regular)
        break;
      frontier = std::move(next);
      if (frontier.empty()) break;
    }

    if (!found) {
      cv.verdict.value = Verdict::Unknown;
      cv.verdict.detail = "no certificate within budgets";
    }
    result.components.push_back(std::move(cv));
  }
  return result;
}

bool verify_violation(const Subcomplex& sub, const Subcomplex& ambient,
                      const ComponentVerdict& v, const Budgets& budgets) {
  if (v.verdict.value != Verdict::No) return false;
  ComponentDecomposition sub_comps = connected_components(sub);
  std::size_t ci = 0;
  while (ci < sub_comps.count() && sub_comps.basepoints[ci] != v.basepoint) ++ci;
  if (ci == sub_comps.count()) return false;

  GroupPresentation sub_pres = fundamental_group(sub, ci);
  const Subcomplex& comp = sub_comps.components[ci];

  // Nontrivial in the component, by the recorded certificate.
  if (v.sub_nontrivial_by == "free-reduction") {
    if (comp.triangle_mask().any()) return false;
    if (reduce_word(v.witness_word).empty()) return false;
  } else if (v.sub_nontrivial_by == "abelianization") {
    if (zero_in_cokernel(abelianized_relators(sub_pres),
                         abelianize_word(v.witness_word, sub_pres.generator_count)))
      return false;
  } else {
    return false;
  }

  // Trivial in the ambient component, by the recorded certificate.
  ComponentDecomposition amb_comps = connected_components(ambient);
  std::size_t ai = 0;
  while (ai < amb_comps.count() &&
         !amb_comps.components[ai].vertex_mask().test(
             ambient.parent().vertex_index(v.basepoint)))
    ++ai;
  if (ai == amb_comps.count()) return false;
  GroupPresentation amb_pres = fundamental_group(ambient, ai);
  Word image = loop_word(amb_pres, word_loop(sub_pres, v.witness_word));

  if (v.ambient_trivial_by == "tietze-empty") {
    TietzeResult tz = tietze_simplify(amb_pres, budgets.tietze_moves);
    return tz.presentation.generator_count == 0;
  }
  if (v.ambient_trivial_by == "coset-index-1") {
    CosetResult ce = coset_enumeration(amb_pres, {}, budgets.max_cosets);
    return ce.verdict == Verdict::Yes && ce.index == 1 &&
           verify_coset_certificate(amb_pres, {}, ce.table);
  }
  if (v.ambient_trivial_by == "coset-table") {
    CosetResult ce = coset_enumeration(amb_pres, {}, budgets.max_cosets);
    return ce.verdict == Verdict::Yes && verify_coset_certificate(amb_pres, {}, ce.table) &&
           ce.table.trace(0, image) == 0;
  }
  if (v.ambient_trivial_by == "empty-presentation")
    return amb_pres.generator_count == 0;
  return false;
}

}  // namespace npc2
