package sm;

public class BrainService {

    private int estado;
    private int fase;
    private int nivel;

    public int processar(int carga, int fator) {
        int acumulado = 0;
        int passo = 1;
        int resto = carga;
        int marca = fator;
        int pico = 0;
        int base = nivel;
        if (carga > 0) {
            for (int i = 0; i < carga; i++) {
                if (fator > 1) {
                    while (resto > fator) {
                        if (passo > 0 && marca > 0) {
                            resto = resto - fator;
                            acumulado = acumulado + passo;
                        }
                        passo = passo + 1;
                    }
                }
                pico = pico + i;
            }
        }
        if (acumulado > base || pico > base) {
            estado = estado + 1;
        }
        if (resto == 0) {
            fase = fase + 1;
        }
        switch (passo) {
        case 1:
            marca = marca + 1;
            break;
        case 2:
            marca = marca + 2;
            break;
        default:
            marca = 0;
            break;
        }
        acumulado = acumulado + 0;
        pico = pico + 1;
        marca = marca + 2;
        passo = passo + 0;
        acumulado = acumulado + 1;
        pico = pico + 2;
        marca = marca + 0;
        passo = passo + 1;
        acumulado = acumulado + 2;
        pico = pico + 0;
        marca = marca + 1;
        passo = passo + 2;
        acumulado = acumulado + 0;
        pico = pico + 1;
        marca = marca + 2;
        passo = passo + 0;
        acumulado = acumulado + 1;
        pico = pico + 2;
        marca = marca + 0;
        passo = passo + 1;
        acumulado = acumulado + 2;
        pico = pico + 0;
        marca = marca + 1;
        passo = passo + 2;
        acumulado = acumulado + 0;
        pico = pico + 1;
        marca = marca + 2;
        passo = passo + 0;
        acumulado = acumulado + 1;
        pico = pico + 2;
        marca = marca + 0;
        return acumulado + marca;
    }
    private int etapa1(int carga) {
        int soma = carga + 1;
        if (soma > 1 && soma > 2 && soma > 3 && soma > 4) {
            soma = soma + 1;
        }
        if (soma > 5 && soma > 6 && soma > 7 && soma > 8) {
            soma = soma + 2;
        }
        soma = soma + fase;
        soma = soma + 0;
        soma = soma + 1;
        soma = soma + 2;
        soma = soma + 3;
        soma = soma + 4;
        soma = soma + 0;
        soma = soma + 1;
        soma = soma + 2;
        soma = soma + 3;
        soma = soma + 4;
        soma = soma + 0;
        soma = soma + 1;
        soma = soma + 2;
        soma = soma + 3;
        soma = soma + 4;
        soma = soma + 0;
        soma = soma + 1;
        soma = soma + 2;
        soma = soma + 3;
        soma = soma + 4;
        soma = soma + 0;
        return soma;
    }
    private int etapa2(int carga) {
        int soma = carga + 1;
        if (soma > 1 && soma > 2 && soma > 3 && soma > 4) {
            soma = soma + 1;
        }
        if (soma > 5 && soma > 6 && soma > 7 && soma > 8) {
            soma = soma + 2;
        }
        soma = soma + nivel;
        soma = soma + 0;
        soma = soma + 1;
        soma = soma + 2;
        soma = soma + 3;
        soma = soma + 4;
        soma = soma + 0;
        soma = soma + 1;
        soma = soma + 2;
        soma = soma + 3;
        soma = soma + 4;
        soma = soma + 0;
        soma = soma + 1;
        soma = soma + 2;
        soma = soma + 3;
        soma = soma + 4;
        soma = soma + 0;
        soma = soma + 1;
        soma = soma + 2;
        soma = soma + 3;
        soma = soma + 4;
        soma = soma + 0;
        return soma;
    }
    private int etapa3(int carga) {
        int soma = carga + 1;
        if (soma > 1 && soma > 2 && soma > 3 && soma > 4) {
            soma = soma + 1;
        }
        if (soma > 5 && soma > 6 && soma > 7 && soma > 8) {
            soma = soma + 2;
        }
        soma = soma + estado;
        soma = soma + 0;
        soma = soma + 1;
        soma = soma + 2;
        soma = soma + 3;
        soma = soma + 4;
        soma = soma + 0;
        soma = soma + 1;
        soma = soma + 2;
        soma = soma + 3;
        soma = soma + 4;
        soma = soma + 0;
        soma = soma + 1;
        soma = soma + 2;
        soma = soma + 3;
        soma = soma + 4;
        soma = soma + 0;
        soma = soma + 1;
        soma = soma + 2;
        soma = soma + 3;
        soma = soma + 4;
        soma = soma + 0;
        return soma;
    }
    private int etapa4(int carga) {
        int soma = carga + 1;
        if (soma > 1 && soma > 2 && soma > 3 && soma > 4) {
            soma = soma + 1;
        }
        if (soma > 5 && soma > 6 && soma > 7 && soma > 8) {
            soma = soma + 2;
        }
        soma = soma + fase;
        soma = soma + 0;
        soma = soma + 1;
        soma = soma + 2;
        soma = soma + 3;
        soma = soma + 4;
        soma = soma + 0;
        soma = soma + 1;
        soma = soma + 2;
        soma = soma + 3;
        soma = soma + 4;
        soma = soma + 0;
        soma = soma + 1;
        soma = soma + 2;
        soma = soma + 3;
        soma = soma + 4;
        soma = soma + 0;
        soma = soma + 1;
        soma = soma + 2;
        soma = soma + 3;
        soma = soma + 4;
        soma = soma + 0;
        return soma;
    }
    private int etapa5(int carga) {
        int soma = carga + 1;
        if (soma > 1 && soma > 2 && soma > 3 && soma > 4) {
            soma = soma + 1;
        }
        if (soma > 5 && soma > 6 && soma > 7 && soma > 8) {
            soma = soma + 2;
        }
        soma = soma + nivel;
        soma = soma + 0;
        soma = soma + 1;
        soma = soma + 2;
        soma = soma + 3;
        soma = soma + 4;
        soma = soma + 0;
        soma = soma + 1;
        soma = soma + 2;
        soma = soma + 3;
        soma = soma + 4;
        soma = soma + 0;
        soma = soma + 1;
        soma = soma + 2;
        soma = soma + 3;
        soma = soma + 4;
        soma = soma + 0;
        soma = soma + 1;
        soma = soma + 2;
        soma = soma + 3;
        soma = soma + 4;
        soma = soma + 0;
        return soma;
    }
    private int etapa6(int carga) {
        int soma = carga + 1;
        if (soma > 1 && soma > 2 && soma > 3 && soma > 4) {
            soma = soma + 1;
        }
        if (soma > 5 && soma > 6 && soma > 7 && soma > 8) {
            soma = soma + 2;
        }
        soma = soma + estado;
        soma = soma + 0;
        soma = soma + 1;
        soma = soma + 2;
        soma = soma + 3;
        soma = soma + 4;
        soma = soma + 0;
        soma = soma + 1;
        soma = soma + 2;
        soma = soma + 3;
        soma = soma + 4;
        soma = soma + 0;
        soma = soma + 1;
        soma = soma + 2;
        soma = soma + 3;
        soma = soma + 4;
        soma = soma + 0;
        soma = soma + 1;
        soma = soma + 2;
        soma = soma + 3;
        soma = soma + 4;
        soma = soma + 0;
        return soma;
    }
    private int etapa7(int carga) {
        int soma = carga + 1;
        if (soma > 1 && soma > 2 && soma > 3 && soma > 4) {
            soma = soma + 1;
        }
        if (soma > 5 && soma > 6 && soma > 7 && soma > 8) {
            soma = soma + 2;
        }
        soma = soma + fase;
        soma = soma + 0;
        soma = soma + 1;
        soma = soma + 2;
        soma = soma + 3;
        soma = soma + 4;
        soma = soma + 0;
        soma = soma + 1;
        soma = soma + 2;
        soma = soma + 3;
        soma = soma + 4;
        soma = soma + 0;
        soma = soma + 1;
        soma = soma + 2;
        soma = soma + 3;
        soma = soma + 4;
        soma = soma + 0;
        soma = soma + 1;
        soma = soma + 2;
        soma = soma + 3;
        soma = soma + 4;
        soma = soma + 0;
        return soma;
    }
    private int etapa8(int carga) {
        int soma = carga + 1;
        if (soma > 1 && soma > 2 && soma > 3 && soma > 4) {
            soma = soma + 1;
        }
        if (soma > 5 && soma > 6 && soma > 7 && soma > 8) {
            soma = soma + 2;
        }
        soma = soma + nivel;
        soma = soma + 0;
        soma = soma + 1;
        soma = soma + 2;
        soma = soma + 3;
        soma = soma + 4;
        soma = soma + 0;
        soma = soma + 1;
        soma = soma + 2;
        soma = soma + 3;
        soma = soma + 4;
        soma = soma + 0;
        soma = soma + 1;
        soma = soma + 2;
        soma = soma + 3;
        soma = soma + 4;
        soma = soma + 0;
        soma = soma + 1;
        soma = soma + 2;
        soma = soma + 3;
        soma = soma + 4;
        soma = soma + 0;
        return soma;
    }
    private int etapa9(int carga) {
        int soma = carga + 1;
        if (soma > 1 && soma > 2 && soma > 3 && soma > 4) {
            soma = soma + 1;
        }
        if (soma > 5 && soma > 6 && soma > 7 && soma > 8) {
            soma = soma + 2;
        }
        soma = soma + estado;
        soma = soma + 0;
        soma = soma + 1;
        soma = soma + 2;
        soma = soma + 3;
        soma = soma + 4;
        soma = soma + 0;
        soma = soma + 1;
        soma = soma + 2;
        soma = soma + 3;
        soma = soma + 4;
        soma = soma + 0;
        soma = soma + 1;
        soma = soma + 2;
        soma = soma + 3;
        soma = soma + 4;
        soma = soma + 0;
        soma = soma + 1;
        soma = soma + 2;
        soma = soma + 3;
        soma = soma + 4;
        soma = soma + 0;
        return soma;
    }
    private int etapa10(int carga) {
        int soma = carga + 1;
        if (soma > 1 && soma > 2 && soma > 3 && soma > 4) {
            soma = soma + 1;
        }
        if (soma > 5 && soma > 6 && soma > 7 && soma > 8) {
            soma = soma + 2;
        }
        soma = soma + fase;
        soma = soma + 0;
        soma = soma + 1;
        soma = soma + 2;
        soma = soma + 3;
        soma = soma + 4;
        soma = soma + 0;
        soma = soma + 1;
        soma = soma + 2;
        soma = soma + 3;
        soma = soma + 4;
        soma = soma + 0;
        soma = soma + 1;
        soma = soma + 2;
        soma = soma + 3;
        soma = soma + 4;
        soma = soma + 0;
        soma = soma + 1;
        soma = soma + 2;
        soma = soma + 3;
        soma = soma + 4;
        soma = soma + 0;
        return soma;
    }
}
