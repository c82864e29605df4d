use super::shape::{MonadShape, Rule, Verdict};

/// First matching elimination rule, in the order R1..R5; `Open` otherwise.
pub fn eliminate(shape: &MonadShape) -> Verdict {
    let rule = zero_column(shape)
        .or_else(|| five_equal_b(shape))
        .or_else(|| split_top_generator(shape))
        .or_else(|| exact(shape, &[3, 1, 1], &[1, 1, 1, 0], Rule::R4))
        .or_else(|| exact(shape, &[2, 2, 2, -1], &[1, 1, 1, 1, 0], Rule::R5));
    match rule {
        Some(rule) => Verdict::Eliminated { rule },
        None => Verdict::Open,
    }
}

// max(b) >= max(a): that summand O(b_j) only admits constant or zero entries.
fn zero_column(shape: &MonadShape) -> Option<Rule> {
    (shape.b[0] >= shape.a[0]).then_some(Rule::R1)
}

// a = (x,x,x,y), y < x, b = (y,y,y,y,y)
fn five_equal_b(shape: &MonadShape) -> Option<Rule> {
    let [x, x2, x3, y] = shape.a[..] else { return None };
    if x != x2 || x != x3 || y >= x || y < 1 {
        return None;
    }
    if shape.b.len() != 5 || shape.b.iter().any(|&b| b != y) {
        return None;
    }
    if 6 * y + 1 >= 4 * x {
        Some(Rule::R2NonExist)
    } else if 6 * y + 1 >= 3 * x {
        Some(Rule::R2Unstable)
    } else {
        None
    }
}

// a = (a2, a1, ..., a1) with g >= 1 copies of a1, b_1 = b_2 = b,
// a2 >= b > a1 >= 0 and 2b - a2 >= 0.
fn split_top_generator(shape: &MonadShape) -> Option<Rule> {
    let (&a2, tail) = shape.a.split_first()?;
    let &a1 = tail.first()?;
    if tail.iter().any(|&x| x != a1) {
        return None;
    }
    let b = shape.b[0];
    if shape.b[1] != b {
        return None;
    }
    (a2 >= b && b > a1 && a1 >= 0 && 2 * b - a2 >= 0).then_some(Rule::R3)
}

fn exact(shape: &MonadShape, a: &[i64], b: &[i64], rule: Rule) -> Option<Rule> {
    (shape.a == a && shape.b == b).then_some(rule)
}
