use super::*;
use proptest::prelude::*;

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn worked_example() -> Vec<Partition> {
    vec![p(&[2, 1, 1]), p(&[2, 2, 2, 1]), p(&[3, 2, 2, 2]), p(&[4, 3, 2, 2])]
}

#[test]
fn worked_example_is_an_lr_sequence() {
    let a = LRSequence::new(worked_example()).unwrap();
    let (lam, beta, mu) = lr_type(&a).unwrap();
    assert_eq!((lam, beta, mu), (p(&[2, 1, 1]), p(&[3, 3, 1]), p(&[4, 3, 2, 2])));
    let t = companion_tableau(&a);
    assert_eq!(t.rows(), &[vec![0, 0, 0, 1], vec![0, 1, 1, 2], vec![2, 3], vec![3]]);
    assert!(check_tableau_conditions(&t));
    let w = lattice_word(&t);
    assert_eq!(w, vec![1, 2, 1, 1, 3, 2, 3]);
    assert!(is_lattice(&w));
    assert_eq!((t.count_in_columns(0, 0, 0), t.count_in_columns(0, 1, 0)), (2, 3));
    assert_eq!((t.count_in_columns(0, 2, 0), t.count_in_columns(0, 3, 0)), (4, 4));
    assert!(enumerate_lr_sequences(&p(&[2, 1, 1]), &p(&[3, 3, 1]), &p(&[4, 3, 2, 2])).contains(&a));
}

#[test]
fn is_lr_sequence_examples() {
    assert!(is_lr_sequence(&[p(&[3, 1])]));
    assert!(!is_lr_sequence(&[p(&[1]), p(&[3])]));
    assert!(!is_lr_sequence(&[]));
    assert!(LRSequence::new(vec![p(&[1]), p(&[3])]).is_err());
}

#[test]
fn lr_type_examples() {
    let lam = p(&[3, 1]);
    let a = LRSequence::new(vec![lam.clone(), lam.clone()]).unwrap();
    assert_eq!(lr_type(&a).unwrap(), (lam.clone(), Partition::empty(), lam));
    // sizes 0,1,2 give conj(β) = (1,1), but the second step sits below the
    // first, so this chain fails condition (ii) and only has a chain type
    let chain = [Partition::empty(), p(&[1]), p(&[1, 1])];
    assert!(!is_lr_sequence(&chain));
    assert_eq!(chain_type(&chain).unwrap(), (Partition::empty(), p(&[2]), p(&[1, 1])));
    let ok = LRSequence::new(vec![Partition::empty(), p(&[1]), p(&[2])]).unwrap();
    assert_eq!(lr_type(&ok).unwrap(), (Partition::empty(), p(&[2]), p(&[2])));
    assert!(matches!(chain_type(&[p(&[1]), p(&[2]), p(&[2, 2])]), Err(Error::SizeDifferencesNotDecreasing(_))));
    assert!(matches!(chain_type(&[p(&[2]), p(&[1, 1])]), Err(Error::NotNested)));
}

#[test]
fn companion_tableau_examples() {
    let lam = p(&[3, 1]);
    let a = LRSequence::new(vec![lam.clone(), lam]).unwrap();
    assert_eq!(companion_tableau(&a).rows(), &[vec![0, 0], vec![0], vec![0]]);
    // one step adding two boxes to a row: the filling exists but repeats 1
    // in a column, so the chain is not an LR sequence
    let t = chain_tableau(&[Partition::empty(), p(&[2])]).unwrap();
    assert_eq!(t.rows(), &[vec![1], vec![1]]);
    assert!(!check_tableau_conditions(&t));
    assert!(chain_tableau(&[p(&[2]), p(&[1, 1])]).is_err());
}

#[test]
fn tableau_condition_examples() {
    assert!(check_tableau_conditions(&SkewTableau::new(vec![vec![0, 0], vec![0]])));
    assert!(!check_tableau_conditions(&SkewTableau::new(vec![vec![1], vec![1]])));
    assert_eq!(lattice_word(&SkewTableau::new(vec![vec![0, 0]])), Vec::<u32>::new());
    assert_eq!(lattice_word(&SkewTableau::new(vec![vec![1, 1], vec![2]])), vec![1, 1, 2]);
}

#[test]
fn enumeration_examples() {
    let lam = p(&[2, 1]);
    let consts = enumerate_lr_sequences(&lam, &Partition::empty(), &lam);
    assert_eq!(consts.len(), 1);
    assert_eq!(consts[0].stages(), &[lam]);
    let seqs = enumerate_lr_sequences(&Partition::empty(), &p(&[2, 2]), &p(&[2, 2]));
    assert_eq!(seqs.len(), 1);
    assert_eq!(seqs[0].stages(), &[Partition::empty(), p(&[1, 1]), p(&[2, 2])]);
}

#[test]
fn source_partition_examples() {
    let lam = p(&[4, 2, 1]);
    assert_eq!(source_partitions(&lam, &Partition::empty()), BTreeSet::from([lam]));
    // outside the hypotheses: beta = (m) at p = 5, m = 2, b = 2
    let oracle = source_partitions(&p(&[5, 5, 4]), &p(&[2]));
    let expect: BTreeSet<Partition> =
        enumerate_partitions(12, 5).into_iter().filter(|l| lr_coefficient(l, &p(&[2]), &p(&[5, 5, 4])) > 0).collect();
    assert_eq!(oracle, expect);
    assert!(!oracle.is_empty());
}

#[test]
fn prediction_examples() {
    assert_eq!(predicted_source_set(&p(&[3, 2]), &p(&[2, 1]), 5), Prediction::NotCovered);
    let Prediction::Covered { case, set } = predicted_source_set(&p(&[5, 5, 5, 4]), &p(&[2, 1]), 5) else {
        panic!("case 2 input must be covered");
    };
    assert_eq!(case, LemmaCase::Two);
    // δ ∈ {(3,1),(2,2),(2,1,1),(1,1,1,1)}, h = 3 - ℓ(δ) + 1
    let expect = BTreeSet::from([p(&[5, 5, 4, 2]), p(&[5, 5, 3, 3]), p(&[5, 4, 4, 3]), p(&[4, 4, 4, 4])]);
    assert_eq!(set, expect);
    // case 1 with b = 4 and β' = (2,1), so beta = (4,3); h = 4 - ℓ(δ)
    let Prediction::Covered { case, set } = predicted_source_set(&p(&[5, 5, 5, 5, 1]), &p(&[4, 3]), 5) else {
        panic!("case 1 input must be covered");
    };
    assert_eq!(case, LemmaCase::One);
    let expect = BTreeSet::from([p(&[5, 5, 3, 1]), p(&[5, 5, 2, 2]), p(&[5, 2, 1, 1]), p(&[1, 1, 1, 1])]);
    assert_eq!(set, expect);
    // β' = (m) is outside the hypothesis
    assert_eq!(predicted_source_set(&p(&[5, 5, 5, 5, 1]), &p(&[2]), 5), Prediction::NotCovered);
}

/// Independent count: semistandard fillings of `conj(mu) / conj(lam)` with
/// content `conj(beta)` whose reverse row reading word is a lattice word.
fn lr_coefficient(lam: &Partition, beta: &Partition, mu: &Partition) -> usize {
    let (outer, inner, content) = (mu.conjugate(), lam.conjugate(), beta.conjugate());
    if !outer.contains(&inner) || inner.size() + content.size() != outer.size() {
        return 0;
    }
    let cells: Vec<(usize, usize)> = (0..outer.len())
        .flat_map(|i| (inner.part(i) as usize..outer.part(i) as usize).map(move |j| (i, j)))
        .collect();
    let mut grid: Vec<Vec<u32>> = (0..outer.len()).map(|i| vec![0; outer.part(i) as usize]).collect();
    let mut left: Vec<u32> = content.parts().to_vec();
    fn fill(k: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<u32>>, left: &mut Vec<u32>, inner: &Partition) -> usize {
        if k == cells.len() {
            let word: Vec<u32> = grid
                .iter()
                .enumerate()
                .flat_map(|(i, row)| row[inner.part(i) as usize..].iter().rev().copied().collect::<Vec<_>>())
                .collect();
            return is_lattice(&word) as usize;
        }
        let (i, j) = cells[k];
        let mut total = 0;
        for v in 1..=left.len() as u32 {
            if left[v as usize - 1] == 0 {
                continue;
            }
            if j > inner.part(i) as usize && grid[i][j - 1] > v {
                continue;
            }
            if i > 0 && j >= inner.part(i - 1) as usize && grid[i - 1][j] >= v {
                continue;
            }
            grid[i][j] = v;
            left[v as usize - 1] -= 1;
            total += fill(k + 1, cells, grid, left, inner);
            left[v as usize - 1] += 1;
            grid[i][j] = 0;
        }
        total
    }
    fill(0, &cells, &mut grid, &mut left, &inner)
}

#[test]
fn enumeration_counts_match_lr_coefficients() {
    for n in 0..=7u32 {
        for mu in enumerate_partitions(n, n.max(1)) {
            for k in 0..=n {
                for lam in enumerate_partitions(k, n.max(1)) {
                    for beta in enumerate_partitions(n - k, n.max(1)) {
                        let seqs = enumerate_lr_sequences(&lam, &beta, &mu);
                        assert_eq!(seqs.len(), lr_coefficient(&lam, &beta, &mu), "{lam} {beta} {mu}");
                        for a in &seqs {
                            assert!(is_lr_sequence(a.stages()));
                            assert_eq!(lr_type(a).unwrap(), (lam.clone(), beta.clone(), mu.clone()));
                        }
                        assert_eq!(exists_lr_sequence(&lam, &beta, &mu), !seqs.is_empty());
                    }
                }
            }
        }
    }
}

/// Every nested chain from `lo` up to `mu` of at most `steps` steps.
fn chains(mu: &Partition, steps: usize) -> Vec<Vec<Partition>> {
    let inside: Vec<Partition> = (0..=mu.size())
        .flat_map(|n| enumerate_partitions(n, mu.first().max(1)))
        .filter(|x| mu.contains(x))
        .collect();
    let mut out: Vec<Vec<Partition>> = inside.iter().map(|x| vec![x.clone()]).collect();
    let mut frontier = out.clone();
    for _ in 0..steps {
        let mut next = Vec::new();
        for c in &frontier {
            for x in &inside {
                if x.contains(c.last().unwrap()) {
                    let mut d = c.clone();
                    d.push(x.clone());
                    next.push(d);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.into_iter().filter(|c| c.last() == Some(mu)).collect()
}

fn tableau_of_chain(c: &[Partition]) -> SkewTableau {
    chain_tableau(c).unwrap()
}

#[test]
fn definition_matches_tableau_conditions_on_small_chains() {
    for n in 0..=6u32 {
        for mu in enumerate_partitions(n, n.max(1)) {
            for c in chains(&mu, 3) {
                let t = tableau_of_chain(&c);
                assert_eq!(is_lr_sequence(&c), check_tableau_conditions(&t), "{c:?}");
                if is_lr_sequence(&c) {
                    for (h, stage) in c.iter().enumerate() {
                        let want: Vec<usize> = stage.conjugate().parts().iter().map(|&x| x as usize).collect();
                        assert_eq!(t.sub_shape(h as u32), want);
                    }
                }
            }
        }
    }
}

fn arb_chain() -> impl Strategy<Value = Vec<Partition>> {
    // grow a random chain by adding boxes row by row, capped at size 12
    (proptest::collection::vec(proptest::collection::vec(0usize..5, 0..4), 1..5), 0usize..4).prop_map(|(steps, seed)| {
        let mut cur = Partition::from_parts([seed as u32]);
        let mut out = vec![cur.clone()];
        for rows in steps {
            let mut parts = cur.padded(5);
            for r in rows {
                if parts.iter().sum::<u32>() < 12 && (r == 0 || parts[r - 1] > parts[r]) {
                    parts[r] += 1;
                }
            }
            cur = Partition::from_parts(parts);
            out.push(cur.clone());
        }
        out
    })
}

proptest! {
    #[test]
    fn definition_matches_tableau_conditions_up_to_twelve(c in arb_chain()) {
        let t = tableau_of_chain(&c);
        prop_assert_eq!(is_lr_sequence(&c), check_tableau_conditions(&t));
    }
}
