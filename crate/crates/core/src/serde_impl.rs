//! Serde encodings for the exact-arithmetic types.
//!
//! Matrix and polynomial entries are emitted as JSON numbers while they
//! fit in an `i64` and as decimal strings beyond that, and both forms are
//! accepted on input, so arbitrary-precision values survive JSON without
//! silent truncation.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::abelian::AbelianGroup;
use crate::lattice::Lattice;
use crate::matrix::IntMatrix;
use crate::poly::IntPoly;

struct Entry(BigInt);

impl Serialize for Entry {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match i64::try_from(&self.0) {
            Ok(v) => serializer.serialize_i64(v),
            Err(_) => serializer.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Entry {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct EntryVisitor;
        impl<'de> Visitor<'de> for EntryVisitor {
            type Value = Entry;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a decimal string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Entry, E> {
                Ok(Entry(BigInt::from(v)))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Entry, E> {
                Ok(Entry(BigInt::from(v)))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Entry, E> {
                BigInt::from_str(v.trim())
                    .map(Entry)
                    .map_err(|_| E::custom(format!("not a decimal integer: {v:?}")))
            }
        }
        deserializer.deserialize_any(EntryVisitor)
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.rows()))?;
        for r in 0..self.rows() {
            let row: Vec<Entry> = (0..self.cols()).map(|c| Entry(self.get(r, c).clone())).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct MatrixVisitor;
        impl<'de> Visitor<'de> for MatrixVisitor {
            type Value = IntMatrix;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an array of equally long integer rows")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<IntMatrix, A::Error> {
                let mut rows: Vec<Vec<Entry>> = Vec::new();
                while let Some(row) = seq.next_element::<Vec<Entry>>()? {
                    rows.push(row);
                }
                let r = rows.len();
                let c = rows.first().map_or(0, |row| row.len());
                if rows.iter().any(|row| row.len() != c) {
                    return Err(de::Error::custom("ragged matrix rows"));
                }
                let entries = rows.into_iter().flatten().map(|e| e.0).collect();
                Ok(IntMatrix::new(r, c, entries))
            }
        }
        deserializer.deserialize_seq(MatrixVisitor)
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs().len()))?;
        for c in self.coeffs() {
            seq.serialize_element(&Entry(c.clone()))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let coeffs = Vec::<Entry>::deserialize(deserializer)?;
        Ok(IntPoly::from_coeffs(coeffs.into_iter().map(|e| e.0).collect()))
    }
}

#[derive(Serialize, Deserialize)]
struct LatticeRepr {
    ambient_rank: usize,
    basis: IntMatrix,
}

impl Serialize for Lattice {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        LatticeRepr { ambient_rank: self.ambient_rank(), basis: self.basis().clone() }
            .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Lattice {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = LatticeRepr::deserialize(deserializer)?;
        let basis = if repr.basis.rows() == 0 && repr.basis.cols() == 0 {
            IntMatrix::zero(repr.ambient_rank, 0)
        } else {
            repr.basis
        };
        if basis.rows() != repr.ambient_rank {
            return Err(de::Error::custom("basis rows must equal ambient_rank"));
        }
        Ok(Lattice::from_generators(repr.ambient_rank, &basis))
    }
}

#[derive(Serialize, Deserialize)]
struct AbelianRepr {
    free_rank: usize,
    torsion: Vec<Entry>,
}

impl Serialize for AbelianGroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        AbelianRepr {
            free_rank: self.free_rank(),
            torsion: self.torsion().iter().map(|d| Entry(d.clone())).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for AbelianGroup {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use num_traits::Zero;
        let repr = AbelianRepr::deserialize(deserializer)?;
        let torsion: Vec<BigInt> = repr.torsion.into_iter().map(|e| e.0).collect();
        let chain_ok = torsion.windows(2).all(|w| (&w[1] % &w[0]).is_zero())
            && torsion.iter().all(|d| d >= &BigInt::from(2));
        if !chain_ok {
            return Err(de::Error::custom("torsion must be a divisibility chain of factors >= 2"));
        }
        Ok(AbelianGroup::new(repr.free_rank, torsion))
    }
}
