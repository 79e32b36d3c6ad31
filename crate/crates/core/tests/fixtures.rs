//! Move-set captions for the (4,3) board, start (1,0,0).

mod common;

use common::{board, verts};
use hyperchess::pieces::neighbors;
use hyperchess::search::reach_set;
use hyperchess::{PieceId, PieceRule, Vertex};

const START: [u32; 3] = [1, 0, 0];

/// One-move reach set including the start, as the captions print it.
fn s1(id: PieceId) -> Vec<Vertex> {
    reach_set(PieceRule::new(id), &board(4, 3), &Vertex::from(START), 1).unwrap()
}

#[test]
fn bishop_bar() {
    assert_eq!(s1(PieceId::BishopBar), verts(&[&[1, 0, 0], &[0, 1, 1], &[2, 1, 1], &[3, 2, 2]]));
}

#[test]
fn bishop_millennium() {
    let expected = verts(&[&[1, 0, 0], &[0, 1, 0], &[2, 1, 0], &[3, 2, 0], &[0, 1, 1], &[2, 1, 1], &[3, 2, 2]]);
    assert_eq!(s1(PieceId::BishopMillennium), expected);
}

fn rook_star_caption() -> Vec<Vertex> {
    verts(&[
        &[1, 0, 0],
        &[0, 0, 0],
        &[2, 0, 0],
        &[3, 0, 0],
        &[0, 1, 0],
        &[1, 1, 0],
        &[2, 1, 0],
        &[1, 2, 0],
        &[3, 2, 0],
        &[1, 3, 0],
        &[0, 0, 1],
        &[1, 0, 1],
        &[2, 0, 1],
        &[1, 1, 1],
        &[1, 0, 2],
        &[3, 0, 2],
        &[1, 2, 2],
        &[1, 0, 3],
        &[1, 3, 3],
    ])
}

#[test]
fn rook_star() {
    assert_eq!(s1(PieceId::RookStar), rook_star_caption());
}

#[test]
fn rook_millennium() {
    let expected = verts(&[
        &[1, 0, 0],
        &[0, 0, 0],
        &[2, 0, 0],
        &[3, 0, 0],
        &[1, 1, 0],
        &[1, 2, 0],
        &[1, 3, 0],
        &[0, 0, 1],
        &[1, 0, 1],
        &[2, 0, 1],
        &[1, 1, 1],
        &[1, 0, 2],
        &[3, 0, 2],
        &[1, 2, 2],
        &[1, 0, 3],
        &[1, 3, 3],
    ]);
    assert_eq!(s1(PieceId::RookMillennium), expected);
    // Same set as the extended rook minus the planar-bishop targets.
    let removed = verts(&[&[0, 1, 0], &[2, 1, 0], &[3, 2, 0]]);
    let mut star = rook_star_caption();
    star.retain(|v| !removed.contains(v));
    assert_eq!(expected, star);
}

#[test]
fn rook_bar() {
    let expected = verts(&[
        &[1, 0, 0],
        &[0, 0, 0],
        &[2, 0, 0],
        &[3, 0, 0],
        &[1, 1, 0],
        &[1, 2, 0],
        &[1, 3, 0],
        &[1, 0, 1],
        &[1, 0, 2],
        &[1, 0, 3],
    ]);
    assert_eq!(s1(PieceId::RookBar), expected);
    let nb = neighbors(PieceRule::new(PieceId::RookBar), &board(4, 3), &Vertex::from(START)).unwrap();
    assert_eq!(nb.len(), 9);
}

#[test]
fn queen_millennium() {
    let expected = verts(&[
        &[1, 0, 0],
        &[0, 0, 0],
        &[2, 0, 0],
        &[3, 0, 0],
        &[1, 1, 0],
        &[1, 2, 0],
        &[1, 3, 0],
        &[0, 0, 1],
        &[1, 0, 1],
        &[2, 0, 1],
        &[1, 1, 1],
        &[1, 0, 2],
        &[3, 0, 2],
        &[1, 2, 2],
        &[1, 0, 3],
        &[0, 1, 0],
        &[2, 1, 0],
        &[3, 2, 0],
        &[0, 1, 1],
        &[2, 1, 1],
        &[3, 2, 2],
        &[1, 3, 3],
    ]);
    assert_eq!(expected.len(), 22);
    assert_eq!(s1(PieceId::QueenMillennium), expected);
}

#[test]
fn king() {
    let expected = verts(&[
        &[1, 0, 0],
        &[0, 0, 0],
        &[2, 0, 0],
        &[0, 1, 0],
        &[1, 1, 0],
        &[2, 1, 0],
        &[0, 0, 1],
        &[1, 0, 1],
        &[2, 0, 1],
        &[0, 1, 1],
        &[1, 1, 1],
        &[2, 1, 1],
    ]);
    assert_eq!(s1(PieceId::King), expected);
    let nb = neighbors(PieceRule::new(PieceId::King), &board(4, 3), &Vertex::from(START)).unwrap();
    assert_eq!(nb.len(), 11);
}

#[test]
fn pawn_bar_two_moves() {
    let got = reach_set(PieceRule::new(PieceId::PawnBarForward), &board(4, 3), &Vertex::from(START), 2).unwrap();
    assert_eq!(got, verts(&[&[1, 0, 0], &[1, 1, 0], &[1, 2, 0], &[1, 3, 0]]));
}

#[test]
fn pawn_millennium() {
    let expected = verts(&[&[1, 0, 0], &[1, 1, 0], &[1, 2, 0], &[1, 0, 1], &[1, 1, 1], &[1, 0, 2], &[1, 2, 2]]);
    assert_eq!(s1(PieceId::PawnMillenniumForward), expected);
}

#[test]
fn bishop_tilde_caption_plus_missing_vertex() {
    let mut expected = verts(&[
        &[1, 0, 0],
        &[0, 1, 0],
        &[2, 1, 0],
        &[3, 2, 0],
        &[0, 0, 1],
        &[1, 1, 1],
        &[2, 0, 1],
        &[1, 2, 2],
        &[3, 0, 2],
        &[1, 3, 3],
    ]);
    expected.push(Vertex::from([3, 2, 2]));
    expected.sort();
    assert_eq!(s1(PieceId::BishopTilde), expected);
    // The literal reading keeps it too.
    let literal = reach_set(PieceRule::literal(PieceId::BishopTilde), &board(4, 3), &Vertex::from(START), 1).unwrap();
    assert!(literal.contains(&Vertex::from([3, 2, 2])));
}

#[test]
fn knight_corner() {
    // Ascending ordinal: (2,1) is 10, (1,2) is 17.
    let nb = neighbors(PieceRule::new(PieceId::Knight), &board(8, 2), &Vertex::from([0, 0])).unwrap();
    assert_eq!(nb, vec![Vertex::from([2, 1]), Vertex::from([1, 2])]);
}

#[test]
fn knight_printed_targets_are_not_moves() {
    let nb = neighbors(PieceRule::new(PieceId::Knight), &board(4, 3), &Vertex::from(START)).unwrap();
    assert!(!nb.contains(&Vertex::from([2, 0, 0])));
    assert!(!nb.contains(&Vertex::from([1, 3, 0])));
}
