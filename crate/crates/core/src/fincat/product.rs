use super::category::{FinCategory, MorId, Morphism, ObjId};

/// `C × D` together with the pairing bookkeeping needed to move between
/// component indices and product indices.
#[derive(Debug, Clone)]
pub struct ProductCategory {
    pub category: FinCategory,
    left: FinCategory,
    right: FinCategory,
    morphism_pairs: Vec<(MorId, MorId)>,
    pair_to_morphism: Vec<MorId>,
}

impl ProductCategory {
    pub fn new(left: &FinCategory, right: &FinCategory) -> Self {
        let (n1, n2) = (left.num_objects(), right.num_objects());
        let (m1, m2) = (left.num_morphisms(), right.num_morphisms());
        let objects: Vec<String> = (0..n1 * n2)
            .map(|o| format!("({},{})", left.object_name(o / n2), right.object_name(o % n2)))
            .collect();

        let mut morphism_pairs: Vec<(MorId, MorId)> = (0..n1 * n2)
            .map(|o| (left.identity(o / n2), right.identity(o % n2)))
            .collect();
        let mut pair_to_morphism = vec![usize::MAX; m1 * m2];
        for (i, &(f, g)) in morphism_pairs.iter().enumerate() {
            pair_to_morphism[f * m2 + g] = i;
        }
        let mut non_identity = Vec::new();
        for f in 0..m1 {
            for g in 0..m2 {
                if left.is_identity(f) && right.is_identity(g) {
                    continue;
                }
                pair_to_morphism[f * m2 + g] = morphism_pairs.len();
                morphism_pairs.push((f, g));
                non_identity.push(Morphism {
                    name: format!("({},{})", left.morphism_name(f), right.morphism_name(g)),
                    src: left.src(f) * n2 + right.src(g),
                    dst: left.dst(f) * n2 + right.dst(g),
                });
            }
        }
        let category = FinCategory::from_parts(objects, non_identity, |a, b| {
            let (fa, ga) = morphism_pairs[a];
            let (fb, gb) = morphism_pairs[b];
            pair_to_morphism[left.comp(fa, fb) * m2 + right.comp(ga, gb)]
        });
        ProductCategory {
            category,
            left: left.clone(),
            right: right.clone(),
            morphism_pairs,
            pair_to_morphism,
        }
    }

    pub fn left(&self) -> &FinCategory {
        &self.left
    }

    pub fn right(&self) -> &FinCategory {
        &self.right
    }

    pub fn object(&self, x: ObjId, y: ObjId) -> ObjId {
        x * self.right.num_objects() + y
    }

    pub fn object_components(&self, o: ObjId) -> (ObjId, ObjId) {
        let n2 = self.right.num_objects();
        (o / n2, o % n2)
    }

    pub fn morphism(&self, f: MorId, g: MorId) -> MorId {
        self.pair_to_morphism[f * self.right.num_morphisms() + g]
    }

    pub fn morphism_components(&self, m: MorId) -> (MorId, MorId) {
        self.morphism_pairs[m]
    }
}

/// `C × D` with componentwise composition.
pub fn product_category(left: &FinCategory, right: &FinCategory) -> FinCategory {
    ProductCategory::new(left, right).category
}

#[cfg(test)]
mod tests {
    use super::super::category::examples::*;
    use super::*;

    #[test]
    fn arrow_squared_counts() {
        let p = product_category(&walking_arrow(), &walking_arrow());
        assert_eq!((p.num_objects(), p.num_morphisms()), (4, 9));
        p.validate().unwrap();
    }

    #[test]
    fn unit_law_with_terminal() {
        let c = linear_order(3);
        let p = ProductCategory::new(&c, &terminal());
        assert_eq!(p.category.num_objects(), 3);
        assert_eq!(p.category.num_morphisms(), c.num_morphisms());
        for f in c.morphisms() {
            for g in c.morphisms() {
                let lhs = c.compose(g, f).map(|h| p.morphism(h, 0));
                assert_eq!(lhs, p.category.compose(p.morphism(g, 0), p.morphism(f, 0)));
            }
        }
    }

    #[test]
    fn klein_four_from_z2_squared() {
        let z2 = cyclic_group(2);
        let p = product_category(&z2, &z2);
        assert_eq!(p.num_morphisms(), 4);
        // every element squares to the identity and the group is abelian
        for a in p.morphisms() {
            assert_eq!(p.comp(a, a), 0);
            for b in p.morphisms() {
                assert_eq!(p.comp(a, b), p.comp(b, a));
            }
        }
    }
}
