use std::fmt;

macro_rules! dense_id {
    ($(#[$meta:meta])* $name:ident, $prefix:literal) => {
        $(#[$meta])*
        #[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name(pub usize);

        impl $name {
            #[inline]
            pub fn index(self) -> usize {
                self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, concat!($prefix, "{}"), self.0)
            }
        }

        impl From<usize> for $name {
            fn from(i: usize) -> Self {
                $name(i)
            }
        }
    };
}

dense_id!(
    /// Vertex of a planar map. True vertices occupy `[0, n)`, fake vertices follow.
    VertexId,
    "v"
);
dense_id!(
    /// Edge of the drawn graph (not a segment of the planarization).
    EdgeId,
    "e"
);
dense_id!(
    /// Half of a planarization segment. Dart `2s` runs along segment `s` in its
    /// forward direction, `2s + 1` is its twin.
    DartId,
    "d"
);
dense_id!(FaceId, "f");

impl DartId {
    #[inline]
    pub fn twin(self) -> DartId {
        DartId(self.0 ^ 1)
    }

    #[inline]
    pub fn segment(self) -> usize {
        self.0 >> 1
    }

    #[inline]
    pub fn is_forward(self) -> bool {
        self.0 & 1 == 0
    }
}
