#pragma once

// Values printed in the published erf tables: (x, y), the rational
// column, the reference column and the relative difference. Kept as text
// so tests can compare both parsed values and the rendered strings.

#include <array>

struct PublishedRow {
  double x;
  double y;
  const char* rational;
  const char* reference;
  const char* delta;
};

inline constexpr std::array<PublishedRow, 17> published_real = {{
    {10, 10, "9.616493742724747E-1", "9.616493742724749E-1", "2.3090E-16"},
    {10, 5, "1.000000000000000E0", "1.000000000000000E0", "0"},
    {5, 5, "9.303796037430947E-1", "9.303796037430951E-1", "4.7732E-16"},
    {5, 1, "1.000000000002960E0", "1.000000000002960E0", "0"},
    {1, 1, "1.316151281697949E0", "1.316151281697948E0", "6.7483E-16"},
    {1, 0.5, "9.507097283189570E-1", "9.507097283189572E-1", "2.3356E-16"},
    {0.5, 0.5, "6.426129148548198E-1", "6.426129148548205E-1", "1.2094E-15"},
    {0.5, 0.1, "5.249121488205361E-1", "5.249121488205371E-1", "1.9036E-15"},
    {0.1, 0.1, "1.135856345618654E-1", "1.135856345618664E-1", "8.7969E-15"},
    {0.1, 0.05, "1.127425509896926E-1", "1.127425509896922E-1", "2.9542E-15"},
    {0.05, 0.05, "5.651284873688534E-2", "5.651284873688744E-2", "3.7326E-14"},
    {0.05, 0.01, "5.637760588665819E-2", "5.637760588665963E-2", "2.5600E-14"},
    {0.01, 0.01, "1.128454387859423E-2", "1.128454387859545E-2", "1.0822E-13"},
    {0.01, 0.005, "1.128369762595771E-2", "1.128369762595882E-2", "9.8392E-14"},
    {0.005, 0.005, "5.641989865663000E-3", "5.641989865664443E-3", "2.5581E-13"},
    {0.005, 0.001, "5.641854461787554E-3", "5.641854461787776E-3", "3.9357E-14"},
    {0.001, 0.001, "1.128379919345890E-3", "1.128379919343114E-3", "2.4598E-12"},
}};

inline constexpr std::array<PublishedRow, 17> published_imag = {{
    {10, 10, "-1.098768460819404E-2", "-1.098768460819399E-2", "4.2627E-15"},
    {10, 5, "-9.495949264558077E-36", "-9.495949264558098E-36", "2.2517E-15"},
    {5, 5, "3.893619089512146E-2", "3.893619089512138E-2", "2.1385E-15"},
    {5, 1, "-2.846018382085604E-12", "-2.846018382085594E-12", "3.5479E-15"},
    {1, 1, "1.904534692378354E-1", "1.904534692378347E-1", "3.2062E-15"},
    {1, 0.5, "1.879734672233839E-1", "1.879734672233833E-1", "3.2485E-15"},
    {0.5, 0.5, "4.578813944351928E-1", "4.578813944351922E-1", "1.4548E-15"},
    {0.5, 0.1, "8.802479434588868E-2", "8.802479434588850E-2", "2.0496E-15"},
    {0.1, 0.1, "1.120811719910652E-1", "1.120811719910650E-1", "1.9811E-15"},
    {0.1, 0.05, "5.590323090214489E-2", "5.590323090214489E-2", "0"},
    {0.05, 0.05, "5.632478587819852E-2", "5.632478587819856E-2", "6.1597E-16"},
    {0.05, 0.01, "1.125599074671486E-2", "1.125599074671481E-2", "5.2399E-15"},
    {0.01, 0.01, "1.128303937304405E-2", "1.128303937304429E-2", "2.1832E-14"},
    {0.01, 0.005, "5.641378676150062E-3", "5.641378676150111E-3", "8.7637E-15"},
    {0.005, 0.005, "5.641801802469853E-3", "5.641801802469647E-3", "3.6436E-14"},
    {0.005, 0.001, "1.128351334067245E-3", "1.128351334067475E-3", "2.0351E-13"},
    {0.001, 0.001, "1.128378414842284E-3", "1.128378414846887E-3", "4.0794E-12"},
}};
