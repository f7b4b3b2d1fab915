//! Printed degeneracy conditions of the two quintic cascades, in the
//! syntax of [`super::formula`].
//!
//! The `(y+x^2)^2` conditions from D2 on are written in letters where `c`
//! stands for the family coefficient of `x*y^2` minus `a`; use
//! `shifted` before evaluating them. Two printed terms are corrected:
//! `16*h*d^3` in D4 reads `16*h*d^2`, and in D6 the term `c^3*a^2*d` reads
//! `c^3*a^2*d^2` and `52034` reads `52032`. Both corrections restore
//! weighted homogeneity.

// (y+x^2)^2 family, family letters.
pub const TAC_S: &str = "a^2-2*a*c+c^2-4*e+4*f+4*d";
pub const TAC_B: &str = "a+c";
pub const TAC_E: &str = "(a^2-2*a*c+c^2+4*f+4*d)/4";
pub const TAC_G: &str = "a^2*c/2-a*c^2/4-a^3/4+f*a/2-f*c/2-d*a/2+d*c/2+h";
pub const TAC_D1: &str = "256*f^2+256*f*c^2-256*f*a^2-512*d*f+256*c^2*a^2+256*a^4+512*d*a^2+256*d^2-512*d*c*a+1024*j-512*h*c+512*h*a-512*a^3*c-1024*k";

// (y+x^2)^2 family, shifted letters.
pub const TAC_D2: &str = "-4*a*d*f+8*l+4*d*c^2*a+4*f*c*a^2-4*d*c*a^2-4*j*c-4*h*c*a-f*c^3+2*c*f^2-2*c^3*a^2-2*c*d^2+2*a*f^2+2*c^2*a^3+2*a*d^2+2*h*c^2-4*h*f+4*h*d";

pub const TAC_D3: &str = "20480*c^2*a^2*d+16384*m-4096*f*c^3*a-8192*f*c^2*a^2+8192*h*c^2*a+4096*f*c^2*d-8192*h*c*d-16384*d^2*c*a-8192*j*c*a+4096*a^2*d^2+4096*c^2*a^4+4096*h^2+4096*a^2*f^2+8192*a*d*h-8192*c*a^2*h-8192*h*a*f+4096*d^3-1024*f^2*c^2+4096*f^2*d+1024*d^2*c^2-8192*d^2*f-8192*j*f+8192*j*d+1024*c^4*a^2-8192*c^3*a^3+16384*f*c*a*d-2048*d*c^3*a-8192*a^3*d*c-8192*a^2*d*f+8192*c*a^3*f";

pub const TAC_D4: &str = "72*c^2*a^3*d+8*a*f*c^2*d-56*a*h*c*d+24*a*h*c*f+8*a^3*d^2+8*c^2*a^5+8*a*h^2+8*a^3*f^2+14*c^4*a^3-28*c^3*a^4-a^2*c^5-12*c*h^2-3*f^2*c^3-d^2*c^3+72*f*c*a^2*d-8*f*c^3*a^2-40*f*c^2*a^3+40*h*c^2*a^2-60*d^2*c*a^2-12*f^2*c*a^2+16*a^2*d*h-16*c*a^3*h-16*h*a^2*f-36*d*c^3*a^2-16*a^4*d*c-16*a^3*d*f+16*c*a^4*f-4*f*c^3*d+8*h*c^2*d+12*h*c^2*f-14*a*f^2*c^2+4*a*f*c^4+30*a*d^2*c^2-8*a*h*c^3+2*a*d*c^4-32*a*d^2*f+8*d*c*f^2+16*d*a*f^2-16*d*h*f-8*c*d^3+16*a*d^3+16*h*d^2+16*j*h-16*j*a*f+16*j*a*d-16*j*c*a^2-8*j*f*c-8*j*d*c+8*j*a*c^2";

pub const TAC_D5: &str = "1024*(4*a^2-28*c*a+c^2+24*d-8*f)*(-2*h+2*a*f-2*a*d+2*c*a^2+f*c+d*c-a*c^2)^2";
pub const TAC_Q: &str = "-2*h+2*a*f-2*a*d+2*c*a^2+f*c+d*c-a*c^2";
pub const TAC_H_TERMINAL: &str = "(2*a*f-2*a*d+2*c*a^2+f*c+d*c-a*c^2)/2";
pub const TAC_F_TERMINAL: &str = "(4*a^2-28*a*c+c^2+24*d)/8";
pub const TAC_D6: &str = "512*a^9+12288*c^3*a^6-106176*c^4*a^5-122592*c^5*a^4-31936*c^6*a^3+6144*h^2*a^3+768*h^2*c^3+32768*d^3*a^3+32768*d^3*c^3-48*c^6*h+3360*c^7*a^2+96*c^7*d-102*c^8*a+24576*a^5*d^2+24576*c^2*a^7+3072*d^2*c^5+340608*c^4*a^3*d+16896*c^2*a^5*d-301056*c^2*a^3*d^2-316416*c^3*a^2*d^2+97536*c^5*a^2*d+24576*h^2*a*d-27648*h^2*c*a^2+24576*h^2*d*c-26112*h^2*a*c^2+98304*d^3*c*a^2+98304*d^3*a*c^2-36096*h*c^2*a^4-52032*h*c^4*a^2+3264*h*c^5*a-49152*h*c^2*d^2-3072*h*c^4*d-61440*d^2*c*a^4+27648*c*a^5*h-24576*a^4*d*h-49152*a^2*d^2*h-6432*c^6*a*d-49152*a^6*d*c+308736*c^3*a^4*d-4096*h^3+c^9+215040*c^2*a^2*d*h-98304*d^2*c^4*a+101376*h*c^3*a*d+86016*h*c*d*a^3-98304*h*c*d^2*a-118272*c^3*a^3*h+6144*d*a^7-3072*a^6*h-6912*a^8*c";

pub const TAC_PRODUCT_1: &str = "1/4*(d*y+1-a*c*y+a*x)*(a*c*y^2+2*x^2+c*x*y+2*y+f*y^2-d*y^2)^2";
pub const TAC_PRODUCT_2: &str =
    "1/256*(d*y+1-a*c*y+a*x)*(16*x^2+16*y+4*a^2*y^2+16*d*y^2+8*c*x*y-20*a*c*y^2+c^2*y^2)^2";

// y^2(y-x)-x^5+2x^3y family.
pub const DF_B: &str = "-a-1";
pub const DF_SPLIT: &str = "1-2*a+a^2+4*d+4*c";
pub const DF_D: &str = "-(1-2*a+a^2+4*c)/4";
pub const DF_F: &str = "-(1/8-a/8-a^2/8-c/2+a*c/2+a^3/8+e)";
pub const DF_D1: &str = "256*c^2-128*c+384*c*a^2-256*c*a+80-32*a^2-64*a+80*a^4-64*a^3-512*e+1024*g+512*a*e";

