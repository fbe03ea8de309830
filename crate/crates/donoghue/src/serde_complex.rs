//! Serde adapter rendering complex values as {"re": .., "im": ..}.

pub(crate) mod reim {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct ReIm {
        re: f64,
        im: f64,
    }

    pub fn serialize<S: Serializer>(
        c: &Complex64,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        ReIm { re: c.re, im: c.im }.serialize(serializer)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Complex64, D::Error> {
        let v = ReIm::deserialize(deserializer)?;
        Ok(Complex64::new(v.re, v.im))
    }
}
