//! gnuplot scripts that redraw each figure from the emitted CSV files.

use std::fmt::Write;

pub fn script(id: u8, csv_files: &[String], stem: &str) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# figure {id}; data in {}", csv_files.join(", "));
    s.push_str("set datafile separator ','\n");
    s.push_str("set key autotitle columnhead\n");
    s.push_str("set terminal pngcairo size 900,600\n");
    let _ = writeln!(s, "set output '{stem}.png'");
    let main = &csv_files[0];
    match id {
        1 => {
            let tun = csv_files.get(1).map(String::as_str).unwrap_or(main);
            s.push_str("set multiplot layout 1,2\n");
            s.push_str("set xlabel 'x / sqrt(2n+1)'\nset ylabel 'probability density'\n");
            s.push_str("set yrange [0:2]\n");
            let _ = writeln!(
                s,
                "plot '{main}' using 1:2 with lines, '{main}' using 1:3 with lines lc rgb 'black'"
            );
            s.push_str("set autoscale y\nset xlabel 'n'\nset ylabel 'P_tun'\n");
            let _ = writeln!(s, "plot '{tun}' using 1:2 with linespoints");
            s.push_str("unset multiplot\n");
        }
        2 | 5 => {
            s.push_str("set xlabel 'n'\nset ylabel 'P_tun'\n");
            let _ = write!(s, "plot '{main}' using 1:2 with points pt 7 ps 0.4, ");
            let _ = write!(s, "'{main}' using 1:3 with lines lc rgb 'grey'");
            if id == 5 {
                let _ = write!(s, ", '{main}' using 1:4 with lines lc rgb 'black'");
            }
            s.push('\n');
        }
        3 => {
            s.push_str("set xlabel 'x'\nset ylabel 'zeta'\n");
            let _ = writeln!(s, "plot '{main}' using 1:2 with lines");
            if let Some(f) = csv_files.get(1) {
                let _ = writeln!(s, "set output '{stem}_f.png'");
                s.push_str("set ylabel 'zeta/(x^2-1)'\n");
                let _ = writeln!(s, "plot '{f}' using 1:2 with lines");
            }
        }
        _ => {
            s.push_str("set xlabel 'n'\nset ylabel 'F_inf / F_n'\n");
            let _ = writeln!(s, "plot '{main}' using 1:2 with points pt 7 ps 0.4");
        }
    }
    s
}
