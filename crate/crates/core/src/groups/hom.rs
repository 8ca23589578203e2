use std::sync::Arc;

use super::FiniteGroup;
use crate::config::Budgets;
use crate::{Error, Result};

/// A homomorphism between finite groups, stored as its full image array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupHom {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    images: Vec<usize>,
}

impl GroupHom {
    /// Checks the homomorphism law on every pair of source elements.
    pub fn new(source: Arc<FiniteGroup>, target: Arc<FiniteGroup>, images: Vec<usize>) -> Result<Self> {
        if images.len() != source.order() {
            return Err(Error::invalid(format!(
                "hom has {} images for a source of order {}",
                images.len(),
                source.order()
            )));
        }
        if let Some(&x) = images.iter().find(|&&x| x >= target.order()) {
            return Err(Error::invalid(format!("hom image {x} outside target")));
        }
        for x in source.elements() {
            for y in source.elements() {
                if images[source.mul(x, y)] != target.mul(images[x], images[y]) {
                    return Err(Error::invalid(format!(
                        "not a homomorphism: f({x}*{y}) != f({x})*f({y})"
                    )));
                }
            }
        }
        Ok(GroupHom {
            source,
            target,
            images,
        })
    }

    /// Extends images of the canonical generators of `source`.
    pub fn from_generator_images(
        source: Arc<FiniteGroup>,
        target: Arc<FiniteGroup>,
        gen_images: &[usize],
    ) -> Result<Self> {
        let gens = source.generators();
        if gens.len() != gen_images.len() {
            return Err(Error::invalid(format!(
                "expected {} generator images (or {} element images), got {}",
                gens.len(),
                source.order(),
                gen_images.len()
            )));
        }
        if gen_images.iter().any(|&x| x >= target.order()) {
            return Err(Error::invalid("generator image outside target"));
        }
        let images = extend(&source, &target, &gens, gen_images)
            .ok_or_else(|| Error::invalid("generator images do not define a homomorphism"))?;
        Self::new(source, target, images)
    }

    pub fn identity(g: Arc<FiniteGroup>) -> Self {
        let images = g.elements().collect();
        GroupHom {
            source: g.clone(),
            target: g,
            images,
        }
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        self.images.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    /// Ascending image subgroup.
    pub fn image(&self) -> Vec<usize> {
        let mut v = self.images.clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &GroupHom) -> Result<GroupHom> {
        if other.target.as_ref() != self.source.as_ref() {
            return Err(Error::invalid("composition of homs with mismatched groups"));
        }
        Ok(GroupHom {
            source: other.source.clone(),
            target: self.target.clone(),
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        })
    }

    /// `Ad(x) ∘ self`, for `x` in the target.
    pub fn conjugated(&self, x: usize) -> GroupHom {
        GroupHom {
            source: self.source.clone(),
            target: self.target.clone(),
            images: self.images.iter().map(|&y| self.target.conj(x, y)).collect(),
        }
    }

    pub(crate) fn from_parts_unchecked(source: Arc<FiniteGroup>, target: Arc<FiniteGroup>, images: Vec<usize>) -> Self {
        GroupHom {
            source,
            target,
            images,
        }
    }
}

/// Breadth-first extension of generator images; `None` on inconsistency.
fn extend(source: &FiniteGroup, target: &FiniteGroup, gens: &[usize], imgs: &[usize]) -> Option<Vec<usize>> {
    let mut images = vec![usize::MAX; source.order()];
    images[0] = 0;
    let mut queue = vec![0usize];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        for (&g, &gi) in gens.iter().zip(imgs) {
            let y = source.mul(x, g);
            let yi = target.mul(images[x], gi);
            if images[y] == usize::MAX {
                images[y] = yi;
                queue.push(y);
            } else if images[y] != yi {
                return None;
            }
        }
        i += 1;
    }
    images.iter().all(|&x| x != usize::MAX).then_some(images)
}

/// The inner automorphism `y ↦ x·y·x⁻¹`.
pub fn conjugation(g: &Arc<FiniteGroup>, x: usize) -> GroupHom {
    let images = g.elements().map(|y| g.conj(x, y)).collect();
    GroupHom::from_parts_unchecked(g.clone(), g.clone(), images)
}

/// All injective homomorphisms `src → dst`, ordered lexicographically by the
/// images of the canonical generators of `src`.
pub fn injective_homs(src: &Arc<FiniteGroup>, dst: &Arc<FiniteGroup>, budgets: &Budgets) -> Result<Vec<GroupHom>> {
    for g in [src, dst] {
        if g.order() > budgets.max_group_order {
            return Err(Error::ResourceLimit(format!(
                "group order {} exceeds bound {}",
                g.order(),
                budgets.max_group_order
            )));
        }
    }
    if !dst.order().is_multiple_of(src.order()) {
        return Ok(Vec::new());
    }
    let gens = src.generators();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            let k = src.element_order(g);
            dst.elements().filter(|&y| dst.element_order(y) == k).collect()
        })
        .collect();
    let total = candidates
        .iter()
        .try_fold(1u64, |acc, c| acc.checked_mul(c.len() as u64))
        .unwrap_or(u64::MAX);
    if total > budgets.max_hom_candidates {
        return Err(Error::ResourceLimit(format!(
            "{total} hom candidates exceed bound {}",
            budgets.max_hom_candidates
        )));
    }
    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    if candidates.iter().any(|c| c.is_empty()) {
        return Ok(out);
    }
    loop {
        let imgs: Vec<usize> = choice.iter().zip(&candidates).map(|(&i, c)| c[i]).collect();
        if let Some(images) = extend(src, dst, &gens, &imgs) {
            if let Ok(h) = GroupHom::new(src.clone(), dst.clone(), images) {
                if h.is_injective() {
                    out.push(h);
                }
            }
        }
        // odometer, last generator fastest
        let mut k = gens.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < candidates[k].len() {
                break;
            }
            choice[k] = 0;
        }
        if gens.is_empty() {
            return Ok(out);
        }
    }
}
