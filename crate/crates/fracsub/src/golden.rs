//! Published error tables, transcribed verbatim.

/// One row of a published table: errors over the refinement chain and the
/// printed average rate.
#[derive(Clone, Copy, Debug)]
pub struct GoldenRow {
    pub scheme: &'static str,
    pub alpha: f64,
    /// `ν` (scalar tables) or `μ`; `None` for initial-data rows.
    pub exp: Option<f64>,
    pub errors: &'static [f64],
    pub rate: f64,
    pub rate_theory: Option<f64>,
}

#[derive(Clone, Copy, Debug)]
pub struct GoldenTable {
    pub id: u8,
    /// `N` for time tables, `M = 1/h` for space tables.
    pub params: &'static [usize],
    pub rows: &'static [GoldenRow],
}

const T1: &[GoldenRow] = &[
    GoldenRow { scheme: "cbe", alpha: 0.1, exp: Some(-0.1), errors: &[2.7636e-3, 1.5279e-3, 8.4788e-4, 4.718e-4, 2.631e-4], rate: 0.85, rate_theory: None },
    GoldenRow { scheme: "cbe", alpha: 0.1, exp: Some(-0.5), errors: &[2.0762e-2, 1.5103e-2, 1.1052e-2, 8.1204e-3, 5.9843e-3], rate: 0.45, rate_theory: None },
    GoldenRow { scheme: "cbe", alpha: 0.1, exp: Some(-0.9), errors: &[4.1489e-1, 4.0265e-1, 3.9146e-1, 3.8112e-1, 3.7153e-1], rate: 0.04, rate_theory: None },
    GoldenRow { scheme: "cbe", alpha: 0.5, exp: Some(-0.1), errors: &[4.6742e-2, 3.3543e-2, 2.4446e-2, 1.8019e-2, 1.3391e-2], rate: 0.45, rate_theory: None },
    GoldenRow { scheme: "cbe", alpha: 0.5, exp: Some(-0.3), errors: &[1.1258e-1, 9.2906e-2, 7.7893e-2, 6.6046e-2, 5.6447e-2], rate: 0.25, rate_theory: None },
    GoldenRow { scheme: "cbe", alpha: 0.5, exp: Some(-0.5), errors: &[2.8959e-1, 2.7507e-1, 2.6512e-1, 2.5824e-1, 2.5345e-1], rate: 0.05, rate_theory: None },
    GoldenRow { scheme: "cbe", alpha: 0.7, exp: Some(-0.1), errors: &[1.3185e-1, 1.1051e-1, 9.394e-2, 8.0587e-2, 6.9526e-2], rate: 0.23, rate_theory: None },
    GoldenRow { scheme: "cbe", alpha: 0.7, exp: Some(-0.2), errors: &[1.9793e-1, 1.7798e-1, 1.6231e-1, 1.4934e-1, 1.3817e-1], rate: 0.13, rate_theory: None },
    GoldenRow { scheme: "cbe", alpha: 0.7, exp: Some(-0.3), errors: &[2.9962e-1, 2.8907e-1, 2.8275e-1, 2.7895e-1, 2.7666e-1], rate: 0.03, rate_theory: None },
];

const T2: &[GoldenRow] = &[
    GoldenRow { scheme: "usbd", alpha: 0.1, exp: Some(-0.1), errors: &[2.5725e-3, 1.4344e-3, 8.0166e-4, 4.4881e-4, 2.5163e-4], rate: 0.84, rate_theory: None },
    GoldenRow { scheme: "usbd", alpha: 0.1, exp: Some(-0.5), errors: &[2.0097e-2, 1.4781e-2, 1.0893e-2, 8.0416e-3, 5.9451e-3], rate: 0.44, rate_theory: None },
    GoldenRow { scheme: "usbd", alpha: 0.1, exp: Some(-0.9), errors: &[4.1427e-1, 4.0236e-1, 3.9131e-1, 3.8105e-1, 3.7149e-1], rate: 0.04, rate_theory: None },
    GoldenRow { scheme: "usbd", alpha: 0.5, exp: Some(-0.1), errors: &[4.4559e-2, 3.2453e-2, 2.39e-2, 1.7746e-2, 1.3254e-2], rate: 0.44, rate_theory: None },
    GoldenRow { scheme: "usbd", alpha: 0.5, exp: Some(-0.3), errors: &[1.0972e-1, 9.1482e-2, 7.718e-2, 6.5688e-2, 5.6267e-2], rate: 0.24, rate_theory: None },
    GoldenRow { scheme: "usbd", alpha: 0.5, exp: Some(-0.5), errors: &[2.8695e-1, 2.7376e-1, 2.6447e-1, 2.5791e-1, 2.5328e-1], rate: 0.05, rate_theory: None },
    GoldenRow { scheme: "usbd", alpha: 0.7, exp: Some(-0.1), errors: &[1.2845e-1, 1.0873e-1, 9.3022e-2, 8.0116e-2, 6.9286e-2], rate: 0.22, rate_theory: None },
    GoldenRow { scheme: "usbd", alpha: 0.7, exp: Some(-0.2), errors: &[1.9449e-1, 1.7619e-1, 1.6139e-1, 1.4887e-1, 1.3792e-1], rate: 0.12, rate_theory: None },
    GoldenRow { scheme: "usbd", alpha: 0.7, exp: Some(-0.3), errors: &[2.9664e-1, 2.8754e-1, 2.8198e-1, 2.7856e-1, 2.7646e-1], rate: 0.03, rate_theory: None },
];

const T3: &[GoldenRow] = &[
    GoldenRow { scheme: "glbe", alpha: 0.1, exp: Some(-0.1), errors: &[2.3849e-3, 1.176e-3, 5.8379e-4, 2.9082e-4, 1.4513e-4], rate: 1.01, rate_theory: None },
    GoldenRow { scheme: "glbe", alpha: 0.1, exp: Some(-0.5), errors: &[1.2491e-2, 6.125e-3, 3.0285e-3, 1.5042e-3, 7.4894e-4], rate: 1.01, rate_theory: None },
    GoldenRow { scheme: "glbe", alpha: 0.1, exp: Some(-0.9), errors: &[3.3167e-2, 1.6092e-2, 7.8995e-3, 3.9006e-3, 1.932e-3], rate: 1.03, rate_theory: None },
    GoldenRow { scheme: "glbe", alpha: 0.5, exp: Some(-0.1), errors: &[1.0049e-3, 4.0389e-4, 1.6766e-4, 7.1469e-5, 3.1188e-5], rate: 1.25, rate_theory: None },
    GoldenRow { scheme: "glbe", alpha: 0.5, exp: Some(-0.3), errors: &[6.8081e-3, 3.1971e-3, 1.5226e-3, 7.3162e-4, 3.5376e-4], rate: 1.07, rate_theory: None },
    GoldenRow { scheme: "glbe", alpha: 0.5, exp: Some(-0.5), errors: &[1.6924e-2, 8.2275e-3, 4.0464e-3, 2.003e-3, 9.9517e-4], rate: 1.02, rate_theory: None },
    GoldenRow { scheme: "glbe", alpha: 0.7, exp: Some(-0.1), errors: &[8.2958e-4, 2.1682e-4, 2.8495e-5, 1.9119e-5, 2.3754e-5], rate: 1.28, rate_theory: None },
    GoldenRow { scheme: "glbe", alpha: 0.7, exp: Some(-0.2), errors: &[4.7144e-3, 2.1506e-3, 9.9154e-4, 4.5987e-4, 2.14e-4], rate: 1.12, rate_theory: None },
    GoldenRow { scheme: "glbe", alpha: 0.7, exp: Some(-0.3), errors: &[1.0252e-2, 5.0163e-3, 2.4778e-3, 1.2303e-3, 6.1272e-4], rate: 1.02, rate_theory: None },
];

const T4: &[GoldenRow] = &[
    GoldenRow { scheme: "fbdf22", alpha: 0.1, exp: Some(-0.1), errors: &[2.7838e-6, 6.9249e-7, 1.7276e-7, 4.3298e-8, 1.3361e-8], rate: 1.93, rate_theory: Some(2.0) },
    GoldenRow { scheme: "fbdf22", alpha: 0.1, exp: Some(-0.5), errors: &[1.9267e-5, 4.7876e-6, 1.1934e-6, 2.9698e-7, 7.6388e-8], rate: 1.99, rate_theory: Some(2.0) },
    GoldenRow { scheme: "fbdf22", alpha: 0.1, exp: Some(-0.9), errors: &[4.6794e-5, 1.1611e-5, 2.8947e-6, 7.2358e-7, 1.9135e-7], rate: 1.98, rate_theory: Some(2.0) },
    GoldenRow { scheme: "fbdf22", alpha: 0.5, exp: Some(-0.1), errors: &[1.4784e-6, 3.6535e-7, 9.0645e-8, 2.2547e-8, 5.5332e-9], rate: 2.02, rate_theory: Some(2.0) },
    GoldenRow { scheme: "fbdf22", alpha: 0.5, exp: Some(-0.3), errors: &[8.049e-6, 1.9935e-6, 4.9528e-7, 1.2328e-7, 3.0805e-8], rate: 2.01, rate_theory: Some(2.0) },
    GoldenRow { scheme: "fbdf22", alpha: 0.5, exp: Some(-0.5), errors: &[1.8146e-5, 4.5109e-6, 1.1244e-6, 2.8072e-7, 7.027e-8], rate: 2.0, rate_theory: Some(2.0) },
    GoldenRow { scheme: "fbdf22", alpha: 0.7, exp: Some(-0.1), errors: &[1.8151e-7, 3.5697e-8, 6.8178e-9, 1.2529e-9, 2.1549e-10], rate: 2.43, rate_theory: Some(2.0) },
    GoldenRow { scheme: "fbdf22", alpha: 0.7, exp: Some(-0.2), errors: &[3.1158e-6, 7.64e-7, 1.8785e-7, 4.6271e-8, 1.1422e-8], rate: 2.02, rate_theory: Some(2.0) },
    GoldenRow { scheme: "fbdf22", alpha: 0.7, exp: Some(-0.3), errors: &[7.1901e-6, 1.7901e-6, 4.4659e-7, 1.1153e-7, 2.7887e-8], rate: 2.0, rate_theory: Some(2.0) },
];

const T5: &[GoldenRow] = &[
    GoldenRow { scheme: "lumped", alpha: 0.1, exp: Some(-0.1), errors: &[2.84935e-3, 7.12046e-4, 1.7686e-4, 4.37131e-5, 1.07539e-5], rate: 2.01, rate_theory: None },
    GoldenRow { scheme: "lumped", alpha: 0.1, exp: Some(-0.5), errors: &[2.85305e-3, 7.12874e-4, 1.77054e-4, 4.37589e-5, 1.07647e-5], rate: 2.01, rate_theory: None },
    GoldenRow { scheme: "lumped", alpha: 0.1, exp: Some(-0.9), errors: &[2.87807e-3, 7.18463e-4, 1.78363e-4, 4.40686e-5, 1.08378e-5], rate: 2.01, rate_theory: None },
    GoldenRow { scheme: "lumped", alpha: 0.5, exp: Some(-0.1), errors: &[2.87595e-3, 7.18032e-4, 1.78268e-4, 4.40474e-5, 1.08331e-5], rate: 2.01, rate_theory: None },
    GoldenRow { scheme: "lumped", alpha: 0.5, exp: Some(-0.5), errors: &[2.89008e-3, 7.21148e-4, 1.78992e-4, 4.42177e-5, 1.0873e-5], rate: 2.01, rate_theory: None },
    GoldenRow { scheme: "lumped", alpha: 0.5, exp: Some(-0.9), errors: &[2.96267e-3, 7.37084e-4, 1.82691e-4, 4.50867e-5, 1.10767e-5], rate: 2.02, rate_theory: None },
    GoldenRow { scheme: "lumped", alpha: 0.9, exp: Some(-0.1), errors: &[2.90264e-3, 7.23869e-4, 1.79618e-4, 4.43634e-5, 1.09068e-5], rate: 2.01, rate_theory: None },
    GoldenRow { scheme: "lumped", alpha: 0.9, exp: Some(-0.5), errors: &[2.90927e-3, 7.25113e-4, 1.79876e-4, 4.44175e-5, 1.09178e-5], rate: 2.01, rate_theory: None },
    GoldenRow { scheme: "lumped", alpha: 0.9, exp: Some(-0.9), errors: &[2.899e-3, 7.21658e-4, 1.78908e-4, 4.41565e-5, 1.08482e-5], rate: 2.02, rate_theory: None },
];

const T6: &[GoldenRow] = &[
    GoldenRow { scheme: "lumped", alpha: 0.1, exp: Some(-0.1), errors: &[1.49059e-3, 3.85242e-4, 9.72914e-5, 2.43964e-5, 6.10447e-6], rate: 1.98, rate_theory: None },
    GoldenRow { scheme: "lumped", alpha: 0.1, exp: Some(-0.5), errors: &[1.49322e-3, 3.8589e-4, 9.74526e-5, 2.44366e-5, 6.11452e-6], rate: 1.98, rate_theory: None },
    GoldenRow { scheme: "lumped", alpha: 0.1, exp: Some(-0.9), errors: &[1.51096e-3, 3.90269e-4, 9.85416e-5, 2.47084e-5, 6.18242e-6], rate: 1.98, rate_theory: None },
    GoldenRow { scheme: "lumped", alpha: 0.5, exp: Some(-0.1), errors: &[1.5083e-3, 3.89613e-4, 9.83783e-5, 2.46676e-5, 6.17224e-6], rate: 1.98, rate_theory: None },
    GoldenRow { scheme: "lumped", alpha: 0.5, exp: Some(-0.5), errors: &[1.51937e-3, 3.92345e-4, 9.90577e-5, 2.48372e-5, 6.21461e-6], rate: 1.98, rate_theory: None },
    GoldenRow { scheme: "lumped", alpha: 0.5, exp: Some(-0.9), errors: &[1.57967e-3, 4.07238e-4, 1.02763e-4, 2.57618e-5, 6.44563e-6], rate: 1.98, rate_theory: None },
    GoldenRow { scheme: "lumped", alpha: 0.9, exp: Some(-0.1), errors: &[1.53039e-3, 3.95065e-4, 9.97343e-5, 2.5006e-5, 6.25679e-6], rate: 1.98, rate_theory: None },
    GoldenRow { scheme: "lumped", alpha: 0.9, exp: Some(-0.5), errors: &[1.54219e-3, 3.97978e-4, 1.00459e-4, 2.51868e-5, 6.30197e-6], rate: 1.98, rate_theory: None },
    GoldenRow { scheme: "lumped", alpha: 0.9, exp: Some(-0.9), errors: &[1.57305e-3, 4.05591e-4, 1.02352e-4, 2.56593e-5, 6.42003e-6], rate: 1.98, rate_theory: None },
];

const T7: &[GoldenRow] = &[
    GoldenRow { scheme: "glbe", alpha: 0.1, exp: Some(-0.1), errors: &[1.1513e-4, 5.7668e-5, 2.8683e-5, 1.4133e-5], rate: 1.01, rate_theory: Some(1.0) },
    GoldenRow { scheme: "glbe", alpha: 0.1, exp: Some(-0.5), errors: &[6.29e-4, 3.1575e-4, 1.5719e-4, 7.7483e-5], rate: 1.01, rate_theory: Some(1.0) },
    GoldenRow { scheme: "glbe", alpha: 0.1, exp: Some(-0.9), errors: &[1.2347e-3, 6.2138e-4, 3.0966e-4, 1.5269e-4], rate: 1.01, rate_theory: Some(1.0) },
    GoldenRow { scheme: "glbe", alpha: 0.5, exp: Some(-0.1), errors: &[7.6705e-5, 3.8558e-5, 1.9212e-5, 9.4743e-6], rate: 1.01, rate_theory: Some(1.0) },
    GoldenRow { scheme: "glbe", alpha: 0.5, exp: Some(-0.5), errors: &[6.7565e-4, 3.3928e-4, 1.6893e-4, 8.3269e-5], rate: 1.01, rate_theory: Some(1.0) },
    GoldenRow { scheme: "glbe", alpha: 0.5, exp: Some(-0.9), errors: &[1.9317e-3, 9.7039e-4, 4.8314e-4, 2.3814e-4], rate: 1.01, rate_theory: Some(1.0) },
    GoldenRow { scheme: "glbe", alpha: 0.9, exp: Some(-0.1), errors: &[1.191e-4, 6.0162e-5, 3.0042e-5, 1.483e-5], rate: 1.0, rate_theory: Some(1.0) },
    GoldenRow { scheme: "glbe", alpha: 0.9, exp: Some(-0.5), errors: &[9.4222e-4, 4.7128e-4, 2.3418e-4, 1.1531e-4], rate: 1.01, rate_theory: Some(1.0) },
    GoldenRow { scheme: "glbe", alpha: 0.9, exp: Some(-0.9), errors: &[2.9369e-3, 1.4524e-3, 7.175e-4, 3.5228e-4], rate: 1.02, rate_theory: Some(1.0) },
    GoldenRow { scheme: "fbdf22", alpha: 0.1, exp: Some(-0.1), errors: &[4.4149e-6, 1.0789e-6, 2.6352e-7, 6.1982e-8], rate: 2.05, rate_theory: Some(2.0) },
    GoldenRow { scheme: "fbdf22", alpha: 0.1, exp: Some(-0.5), errors: &[3.3506e-5, 8.1754e-6, 2.0116e-6, 4.9145e-7], rate: 2.03, rate_theory: Some(2.0) },
    GoldenRow { scheme: "fbdf22", alpha: 0.1, exp: Some(-0.9), errors: &[8.5065e-5, 2.0738e-5, 5.1534e-6, 1.3195e-6], rate: 2.0, rate_theory: Some(2.0) },
    GoldenRow { scheme: "fbdf22", alpha: 0.5, exp: Some(-0.1), errors: &[2.4546e-6, 6.0433e-7, 1.4965e-7, 3.6935e-8], rate: 2.02, rate_theory: Some(2.0) },
    GoldenRow { scheme: "fbdf22", alpha: 0.5, exp: Some(-0.5), errors: &[3.584e-5, 8.7531e-6, 2.1618e-6, 5.3632e-7], rate: 2.02, rate_theory: Some(2.0) },
    GoldenRow { scheme: "fbdf22", alpha: 0.5, exp: Some(-0.9), errors: &[1.369e-4, 3.3254e-5, 8.1879e-6, 2.0308e-6], rate: 2.02, rate_theory: Some(2.0) },
    GoldenRow { scheme: "fbdf22", alpha: 0.9, exp: Some(-0.1), errors: &[3.7018e-6, 9.1485e-7, 2.2762e-7, 5.6738e-8], rate: 2.01, rate_theory: Some(2.0) },
    GoldenRow { scheme: "fbdf22", alpha: 0.9, exp: Some(-0.5), errors: &[5.3813e-5, 1.3104e-5, 3.2321e-6, 8.0203e-7], rate: 2.02, rate_theory: Some(2.0) },
    GoldenRow { scheme: "fbdf22", alpha: 0.9, exp: Some(-0.9), errors: &[2.342e-4, 5.657e-5, 1.3878e-5, 3.4321e-6], rate: 2.03, rate_theory: Some(2.0) },
    GoldenRow { scheme: "glbe", alpha: 0.1, exp: None, errors: &[6.1206e-5, 3.0657e-5, 1.5248e-5, 7.5128e-6], rate: 1.01, rate_theory: Some(1.0) },
    GoldenRow { scheme: "glbe", alpha: 0.5, exp: None, errors: &[2.1663e-4, 1.0878e-4, 5.4162e-5, 2.6698e-5], rate: 1.01, rate_theory: Some(1.0) },
    GoldenRow { scheme: "glbe", alpha: 0.9, exp: None, errors: &[1.756e-4, 8.6843e-5, 4.2901e-5, 2.1063e-5], rate: 1.02, rate_theory: Some(1.0) },
    GoldenRow { scheme: "fbdf22", alpha: 0.1, exp: None, errors: &[2.3469e-6, 5.7351e-7, 1.4007e-7, 3.2928e-8], rate: 2.05, rate_theory: Some(2.0) },
    GoldenRow { scheme: "fbdf22", alpha: 0.5, exp: None, errors: &[1.1491e-5, 2.8066e-6, 6.9333e-7, 1.7217e-7], rate: 2.02, rate_theory: Some(2.0) },
    GoldenRow { scheme: "fbdf22", alpha: 0.9, exp: None, errors: &[1.4004e-5, 3.3826e-6, 8.2982e-7, 2.0523e-7], rate: 2.03, rate_theory: Some(2.0) },
];

const T8: &[GoldenRow] = &[
    GoldenRow { scheme: "glbe", alpha: 0.2, exp: Some(-0.2), errors: &[1.9249e-6, 9.5759e-7, 4.7187e-7, 2.2852e-7], rate: 1.02, rate_theory: Some(1.0) },
    GoldenRow { scheme: "glbe", alpha: 0.2, exp: Some(-0.5), errors: &[4.8396e-6, 2.4092e-6, 1.1875e-6, 5.7515e-7], rate: 1.02, rate_theory: Some(1.0) },
    GoldenRow { scheme: "glbe", alpha: 0.2, exp: Some(-0.8), errors: &[7.7741e-6, 3.8729e-6, 1.9096e-6, 9.2496e-7], rate: 1.02, rate_theory: Some(1.0) },
    GoldenRow { scheme: "glbe", alpha: 0.5, exp: Some(-0.2), errors: &[1.913e-6, 9.5166e-7, 4.6894e-7, 2.2709e-7], rate: 1.02, rate_theory: Some(1.0) },
    GoldenRow { scheme: "glbe", alpha: 0.5, exp: Some(-0.5), errors: &[4.852e-6, 2.4154e-6, 1.1905e-6, 5.7658e-7], rate: 1.02, rate_theory: Some(1.0) },
    GoldenRow { scheme: "glbe", alpha: 0.5, exp: Some(-0.8), errors: &[7.8591e-6, 3.9151e-6, 1.9303e-6, 9.3499e-7], rate: 1.02, rate_theory: Some(1.0) },
    GoldenRow { scheme: "glbe", alpha: 0.8, exp: Some(-0.2), errors: &[1.9364e-6, 9.6328e-7, 4.7463e-7, 2.2982e-7], rate: 1.02, rate_theory: Some(1.0) },
    GoldenRow { scheme: "glbe", alpha: 0.8, exp: Some(-0.5), errors: &[4.9017e-6, 2.44e-6, 1.2026e-6, 5.8237e-7], rate: 1.02, rate_theory: Some(1.0) },
    GoldenRow { scheme: "glbe", alpha: 0.8, exp: Some(-0.8), errors: &[7.9375e-6, 3.9538e-6, 1.9493e-6, 9.441e-7], rate: 1.02, rate_theory: Some(1.0) },
    GoldenRow { scheme: "fbdf22", alpha: 0.2, exp: Some(-0.2), errors: &[3.9656e-8, 9.694e-9, 2.2927e-9, 4.5475e-10], rate: 2.15, rate_theory: Some(2.0) },
    GoldenRow { scheme: "fbdf22", alpha: 0.2, exp: Some(-0.5), errors: &[1.2548e-7, 3.0819e-8, 7.4747e-9, 1.6791e-9], rate: 2.07, rate_theory: Some(2.0) },
    GoldenRow { scheme: "fbdf22", alpha: 0.2, exp: Some(-0.8), errors: &[2.4331e-7, 5.9928e-8, 1.4778e-8, 3.5753e-9], rate: 2.03, rate_theory: Some(2.0) },
    GoldenRow { scheme: "fbdf22", alpha: 0.5, exp: Some(-0.2), errors: &[3.9386e-8, 9.6692e-9, 2.3283e-9, 5.0521e-10], rate: 2.09, rate_theory: Some(2.0) },
    GoldenRow { scheme: "fbdf22", alpha: 0.5, exp: Some(-0.5), errors: &[1.2594e-7, 3.1005e-8, 7.5927e-9, 1.7802e-9], rate: 2.05, rate_theory: Some(2.0) },
    GoldenRow { scheme: "fbdf22", alpha: 0.5, exp: Some(-0.8), errors: &[2.4631e-7, 6.0676e-8, 1.4974e-8, 3.6349e-9], rate: 2.03, rate_theory: Some(2.0) },
    GoldenRow { scheme: "fbdf22", alpha: 0.8, exp: Some(-0.2), errors: &[3.9989e-8, 9.8822e-9, 2.445e-9, 5.9732e-10], rate: 2.02, rate_theory: Some(2.0) },
    GoldenRow { scheme: "fbdf22", alpha: 0.8, exp: Some(-0.5), errors: &[1.2752e-7, 3.149e-8, 7.809e-9, 1.9293e-9], rate: 2.02, rate_theory: Some(2.0) },
    GoldenRow { scheme: "fbdf22", alpha: 0.8, exp: Some(-0.8), errors: &[2.4921e-7, 6.146e-8, 1.5239e-8, 3.7724e-9], rate: 2.02, rate_theory: Some(2.0) },
    GoldenRow { scheme: "glbe", alpha: 0.2, exp: None, errors: &[1.6614e-6, 8.2643e-7, 4.0719e-7, 1.9715e-7], rate: 1.03, rate_theory: Some(1.0) },
    GoldenRow { scheme: "glbe", alpha: 0.5, exp: None, errors: &[2.7484e-6, 1.3682e-6, 6.7433e-7, 3.2655e-7], rate: 1.02, rate_theory: Some(1.0) },
    GoldenRow { scheme: "glbe", alpha: 0.8, exp: None, errors: &[1.7322e-6, 8.6283e-7, 4.2539e-7, 2.0603e-7], rate: 1.02, rate_theory: Some(1.0) },
    GoldenRow { scheme: "fbdf22", alpha: 0.2, exp: None, errors: &[3.438e-8, 8.5296e-9, 2.144e-9, 5.5712e-10], rate: 1.98, rate_theory: Some(2.0) },
    GoldenRow { scheme: "fbdf22", alpha: 0.5, exp: None, errors: &[7.1369e-8, 1.763e-8, 4.377e-9, 1.0865e-9], rate: 2.01, rate_theory: Some(2.0) },
    GoldenRow { scheme: "fbdf22", alpha: 0.8, exp: None, errors: &[5.436e-8, 1.3405e-8, 3.3225e-9, 8.2119e-10], rate: 2.02, rate_theory: Some(2.0) },
];

pub const TABLES: [GoldenTable; 8] = [
    GoldenTable { id: 1, params: &[20, 40, 80, 160, 320], rows: T1 },
    GoldenTable { id: 2, params: &[20, 40, 80, 160, 320], rows: T2 },
    GoldenTable { id: 3, params: &[20, 40, 80, 160, 320], rows: T3 },
    GoldenTable { id: 4, params: &[160, 320, 640, 1280, 2560], rows: T4 },
    GoldenTable { id: 5, params: &[16, 32, 64, 128, 256], rows: T5 },
    GoldenTable { id: 6, params: &[16, 32, 64, 128, 256], rows: T6 },
    GoldenTable { id: 7, params: &[40, 80, 160, 320], rows: T7 },
    GoldenTable { id: 8, params: &[80, 160, 320, 640], rows: T8 },
];

pub fn table(id: u8) -> Option<&'static GoldenTable> {
    TABLES.iter().find(|t| t.id == id)
}
