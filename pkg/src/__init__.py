"""Estados estacionários exatos de modelos de spin coletivos dirigidos-dissipativos.

Módulos principais:
- dicke: Operadores coletivos, estados coerentes e distribuição de Husimi
- special_functions: Bessel modificadas, ramo W₋₁ de Lambert e quadraturas
- solvers: Estados estacionários exatos e oráculo do Liouvilliano
- spectral: Espectro do estado estacionário e oscilador anarmônico crítico
- analytics: Previsões analíticas de tamanho finito
- experiments: Varreduras, otimização de squeezing, ajustes de escala e CLI
"""

__version__ = "1.0.1"
__author__ = "Marcus Vasconcellos"
