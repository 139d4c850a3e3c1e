//! `∫₀ᵗ (t-s)^{α-1} E_{α,α}(-λ(t-s)^α) s^μ ds` against adaptive high-precision
//! quadrature of the convolution integral (mpmath, 25 digits, singular
//! endpoints removed by substitution).

use fracsub_core::mittag_leffler::{ml_conv_weight, ml_conv_weight_normalized};
use fracsub_core::special::gamma;

const QUADRATURE: &[(f64, f64, f64, f64, f64)] = &[
    (0.3, 0.5, 0.05, -0.9, 18.809914493553051659),
    (0.3, 0.5, 0.05, -0.5, 2.2067146643246545838),
    (0.3, 0.5, 0.05, 0.0, 0.37573421480335189111),
    (0.3, 0.5, 0.05, 1.5, 0.0031219317556833207673),
    (0.3, 0.5, 0.5, -0.9, 3.6085287471490765785),
    (0.3, 0.5, 0.5, -0.5, 1.1489817630310049977),
    (0.3, 0.5, 0.5, 0.0, 0.63831536361599998849),
    (0.3, 0.5, 0.5, 1.5, 0.17350583362028353251),
    (0.3, 0.5, 1.0, -0.9, 2.1290741116123308105),
    (0.3, 0.5, 1.0, -0.5, 0.92364867904468925467),
    (0.3, 0.5, 1.0, 0.0, 0.73470198811280195507),
    (0.3, 0.5, 1.0, 1.5, 0.57244226327458021539),
    (0.3, 4.0, 0.05, -0.9, 5.0236506115211312834),
    (0.3, 4.0, 0.05, -0.5, 0.85362373059332144397),
    (0.3, 4.0, 0.05, 0.0, 0.16597888234656879448),
    (0.3, 4.0, 0.05, 1.5, 0.0015913746361514558868),
    (0.3, 4.0, 0.5, -0.9, 0.60597066635001219525),
    (0.3, 4.0, 0.5, -0.5, 0.30967826650947127025),
    (0.3, 4.0, 0.5, 0.0, 0.20040334494206426152),
    (0.3, 4.0, 0.5, 1.5, 0.0642193981204100597),
    (0.3, 4.0, 1.0, -0.9, 0.31698410942322264323),
    (0.3, 4.0, 1.0, -0.5, 0.22475523149649126777),
    (0.3, 4.0, 1.0, 0.0, 0.20837456392112083757),
    (0.3, 4.0, 1.0, 1.5, 0.19155393812289244726),
    (0.3, 9.3726, 0.05, -0.9, 2.0166569142336539689),
    (0.3, 9.3726, 0.05, -0.5, 0.42664334134813943334),
    (0.3, 9.3726, 0.05, 0.0, 0.08819808056425856335),
    (0.3, 9.3726, 0.05, 1.5, 0.00090369206985596712632),
    (0.3, 9.3726, 0.5, -0.9, 0.23340201764144259459),
    (0.3, 9.3726, 0.5, -0.5, 0.1429485780562574693),
    (0.3, 9.3726, 0.5, 0.0, 0.096697305067240637669),
    (0.3, 9.3726, 0.5, 1.5, 0.032531019453257025468),
    (0.3, 9.3726, 1.0, -0.9, 0.12226236127180149057),
    (0.3, 9.3726, 1.0, -0.5, 0.10215352736036242166),
    (0.3, 9.3726, 1.0, 0.0, 0.098456187260238943248),
    (0.3, 9.3726, 1.0, 1.5, 0.094464126165347527328),
    (0.6, 0.5, 0.05, -0.9, 16.003140814366539505),
    (0.6, 0.5, 0.05, -0.5, 1.2683477024632288138),
    (0.6, 0.5, 0.05, 0.0, 0.17365781628628899155),
    (0.6, 0.5, 0.05, 1.5, 0.001073689360152581166),
    (0.6, 0.5, 0.5, -0.9, 5.7805956753526918731),
    (0.6, 0.5, 0.5, -0.5, 1.2647619688877588396),
    (0.6, 0.5, 0.5, 0.0, 0.57686367436033817724),
    (0.6, 0.5, 0.5, 1.5, 0.11990656692403812642),
    (0.6, 0.5, 1.0, -0.9, 3.8202945156113385478),
    (0.6, 0.5, 1.0, -0.5, 1.1730014693887003153),
    (0.6, 0.5, 1.0, 0.0, 0.78104835608759995676),
    (0.6, 0.5, 1.0, 1.5, 0.47635962148317241238),
    (0.6, 4.0, 0.05, -0.9, 7.8086237180096162325),
    (0.6, 4.0, 0.05, -0.5, 0.76513011029692809104),
    (0.6, 4.0, 0.05, 0.0, 0.11710367943240093235),
    (0.6, 4.0, 0.05, 1.5, 0.00082409516896334797318),
    (0.6, 4.0, 0.5, -0.9, 0.89371982363434291381),
    (0.6, 4.0, 0.5, -0.5, 0.35032327467200574758),
    (0.6, 4.0, 0.5, 0.0, 0.20470944574468844875),
    (0.6, 4.0, 0.5, 1.5, 0.056456276337853837248),
    (0.6, 4.0, 1.0, -0.9, 0.41479083547856890033),
    (0.6, 4.0, 1.0, -0.5, 0.25251732037624605423),
    (0.6, 4.0, 1.0, 0.0, 0.22011645951073303007),
    (0.6, 4.0, 1.0, 1.5, 0.18298317839070617498),
    (0.6, 9.3726, 0.05, -0.9, 3.4797483408867133714),
    (0.6, 9.3726, 0.05, -0.5, 0.44012509839633280617),
    (0.6, 9.3726, 0.05, 0.0, 0.075277055581927630774),
    (0.6, 9.3726, 0.05, 1.5, 0.00060075270335022480015),
    (0.6, 9.3726, 0.5, -0.9, 0.28675352954195860787),
    (0.6, 9.3726, 0.5, -0.5, 0.15302243097981525642),
    (0.6, 9.3726, 0.5, 0.0, 0.09853970449131510829),
    (0.6, 9.3726, 0.5, 1.5, 0.030593294985045483866),
    (0.6, 9.3726, 1.0, -0.9, 0.13786529890379023936),
    (0.6, 9.3726, 1.0, -0.5, 0.10801657378739060426),
    (0.6, 9.3726, 1.0, 0.0, 0.10138091680349507799),
    (0.6, 9.3726, 1.0, 1.5, 0.092628512367293975703),
    (0.9, 0.5, 0.05, -0.9, 9.1862101501085948619),
    (0.9, 0.5, 0.05, -0.5, 0.58749933097557891394),
    (0.9, 0.5, 0.05, 0.0, 0.068806913060245765505),
    (0.9, 0.5, 0.05, 1.5, 0.00033255036933853775564),
    (0.9, 0.5, 0.5, -0.9, 7.2300416042310021896),
    (0.9, 0.5, 0.5, -0.5, 1.2417178249691643307),
    (0.9, 0.5, 0.5, 0.0, 0.48004714281300619733),
    (0.9, 0.5, 0.5, 1.5, 0.077385480346728107926),
    (0.9, 0.5, 1.0, -0.9, 5.7405028572621200756),
    (0.9, 0.5, 1.0, -0.5, 1.3924727415561387412),
    (0.9, 0.5, 1.0, 0.0, 0.793189002608278064),
    (0.9, 0.5, 1.0, 1.5, 0.37998895318600062617),
    (0.9, 4.0, 0.05, -0.9, 7.2161061415711659786),
    (0.9, 4.0, 0.05, -0.5, 0.49365733548941906863),
    (0.9, 4.0, 0.05, 0.0, 0.060372094864101842252),
    (0.9, 4.0, 0.05, 1.5, 0.00030788945792980402125),
    (0.9, 4.0, 0.5, -0.9, 1.3990656305673632294),
    (0.9, 4.0, 0.5, -0.5, 0.41948246519496647941),
    (0.9, 4.0, 0.5, 0.0, 0.21323475854328838964),
    (0.9, 4.0, 0.5, 1.5, 0.046953921825969670782),
    (0.9, 4.0, 1.0, -0.9, 0.47958641948025865738),
    (0.9, 4.0, 1.0, -0.5, 0.28648446693340323767),
    (0.9, 4.0, 1.0, 0.0, 0.23739722417139134593),
    (0.9, 4.0, 1.0, 1.5, 0.17379614818022331451),
    (0.9, 9.3726, 0.05, -0.9, 5.0485369198460764036),
    (0.9, 9.3726, 0.05, -0.5, 0.38434173535378973713),
    (0.9, 9.3726, 0.05, 0.0, 0.050074643288182787876),
    (0.9, 9.3726, 0.05, 1.5, 0.00027546499236165830088),
    (0.9, 9.3726, 0.5, -0.9, 0.32513398007514807772),
    (0.9, 9.3726, 0.5, -0.5, 0.16854772951430458964),
    (0.9, 9.3726, 0.5, 0.0, 0.10304760303009412797),
    (0.9, 9.3726, 0.5, 1.5, 0.028147205499930951992),
    (0.9, 9.3726, 1.0, -0.9, 0.13230583773596747589),
    (0.9, 9.3726, 1.0, -0.5, 0.11286948968600325104),
    (0.9, 9.3726, 1.0, 0.0, 0.10521017047383974806),
    (0.9, 9.3726, 1.0, 1.5, 0.091032895048702745802),
];

#[test]
fn closed_form_matches_quadrature() {
    assert_eq!(QUADRATURE.len(), 108);
    for &(a, lam, t, mu, want) in QUADRATURE {
        let got = ml_conv_weight(a, lam, t, mu).unwrap();
        assert!((got - want).abs() <= 1e-9 * want.abs(), "a={a} lam={lam} t={t} mu={mu}: {got} vs {want}");
    }
}

#[test]
fn zero_rate_is_a_riemann_liouville_integral() {
    // λ = 0: I^α t^μ = Γ(μ+1)/Γ(μ+1+α) t^{μ+α}
    for (a, t, mu) in [(0.3, 0.7, -0.5), (0.9, 2.0, 0.0), (0.5, 1.0, 1.5)] {
        let want = gamma(mu + 1.0) / gamma(mu + 1.0 + a) * f64::powf(t, mu + a);
        assert!((ml_conv_weight(a, 0.0, t, mu).unwrap() - want).abs() < 1e-14 * want);
    }
}

#[test]
fn normalization_and_domain() {
    let (a, lam, t, mu) = (0.6, 4.0, 0.5, -0.5);
    let n = ml_conv_weight_normalized(a, lam, t, mu).unwrap();
    assert!((ml_conv_weight(a, lam, t, mu).unwrap() - gamma(0.5) * n).abs() < 1e-15);
    // impulse response t^{α-1} E_{α,α}(-λt^α)
    assert!(ml_conv_weight_normalized(a, lam, t, -1.0).is_ok());
    assert!(ml_conv_weight(a, lam, t, -1.0).is_err());
    assert!(ml_conv_weight(a, lam, 0.0, mu).is_err());
    assert!(ml_conv_weight(a, -1.0, t, mu).is_err());
}
