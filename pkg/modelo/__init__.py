# Constantes do modelo, importadas pelo resto do projeto
import math

PI = math.pi

# Tolerâncias
TOL_FATOR = 1e-12          # resíduo do fator secular numa raiz (escalado por max(1, s))
TOL_PONTO = 1e-10          # resíduo máximo aceito num PontoEspectral
TOL_RESTRICAO = 1e-12      # |2st - Z|
TOL_DOBRA = 1e-10          # |F| e |dF/ds| numa raiz dupla
TOL_QUEBRADO = 1e-12       # resíduo escalado da eq. secular complexa
TOL_POSTO = 1e-8           # razão entre valores singulares no teste de posto

# Varredura
PASSO_VARREDURA = PI / 64
MAX_ITERACOES_REFINO = 200
T_LIMITE_LOG = 350.0       # acima disso sinh é avaliado no domínio logarítmico
LOG_MAXIMO = 709.0

# Série perturbativa
ORDEM_MAXIMA_SERIE = 20
MAX_ITERACOES_PONTO_FIXO = 100

# Regime quebrado
PASSO_JACOBIANO = 1e-7
MAX_PASSOS_NEWTON = 100

# Sequência crítica
MAX_PARES_CRITICOS = 16

# Intervalos impressos para os primeiros valores críticos (Z_nu)
INTERVALOS_CRITICOS = (
    (5.542309, 5.542310),
    (17.90123, 17.90124),
    (33.54495, 33.54495),
    (51.20617, 51.20618),
    (70.3093, 70.3095),
)

# Poço de Dirichlet: apenas valores de referência, nunca calculados aqui
DIRICHLET_CRITICOS = ((4.4748, 4.4754), (12.80154, 12.80156))

# Tabela de referência (Z, alfa, beta, ReE) perto das duas primeiras dobras
TABELA_REFERENCIA = (
    (5.542309, 0.474944, 0.474944, 5.041586),
    (5.542310, 0.474653, 0.474870, 5.044077),
    (5.54232, 0.474125, 0.475399, 5.044078),
    (5.54240, 0.472878, 0.476652, 5.044080),
    (5.55, 0.457619, 0.492438, 5.044371),
    (6.0, 0.358129, 0.622216, 5.062183),
    (6.5, 0.318347, 0.693565, 5.083353),
    (17.90123, 0.325829, 0.325829, 25.61820),
    (17.90124, 0.325757, 0.326139, 25.60761),
    (17.90126, 0.325540, 0.326356, 25.60762),
    (17.90200, 0.323724, 0.328189, 25.60769),
    (17.95, 0.308679, 0.344308, 25.61228),
    (19.0, 0.253831, 0.422062, 25.71469),
)

# Linhas da tabela coladas na dobra: fora do critério de aprovação
LINHAS_PROXIMAS_DOBRA = (5.542310, 5.54232, 5.54240, 17.90124, 17.90126, 17.90200)

VERSAO_ESQUEMA = "1"

# Versão do programa, informada apenas com --meta
VERSAO_PROGRAMA = "1.0.0"
